#pragma once

#include "korobov/params.hpp"

#include <cstdint>

namespace korobov {

/// Three-way status of an asymptotic quantity of a sequence family.
enum class Status { finite, infinite, unknown };

/// lim_j c_j, liminf_j (log c_j)/j, ...: a value with explicit infinite/unknown states.
struct ExtendedValue {
    Status status = Status::unknown;
    double value = 0.0;

    static ExtendedValue finite(double v) { return {Status::finite, v}; }
    static ExtendedValue infinite() { return {Status::infinite, 0.0}; }
    static ExtendedValue unknown() { return {Status::unknown, 0.0}; }
    bool is_finite() const noexcept { return status == Status::finite; }
    bool is_infinite() const noexcept { return status == Status::infinite; }
    bool is_unknown() const noexcept { return status == Status::unknown; }
};

/// Certified enclosure [lo, hi] of a real number.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    static Interval point(double v) { return {v, v}; }
    double mid() const noexcept { return 0.5 * (lo + hi); }
    bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Series with a three-way status; `bracket` is meaningful when finite.
struct SeriesValue {
    Status status = Status::unknown;
    Interval bracket;
};

// Per-kind closed forms.  Explicit lists defer to their tail rule; a list
// without one yields Status::unknown.

/// lim_{j->inf} c_j (families here are monotone, so the limit exists).
ExtendedValue limit(const SequenceFamily& family);

/// liminf_{j->inf} (log c_j) / j
ExtendedValue liminf_log_over_index(const SequenceFamily& family);

/// sum_{j >= first} 1 / c_j with a certified bracket.
SeriesValue reciprocal_tail_sum(const SequenceFamily& family, std::int64_t first = 1);

} // namespace korobov
