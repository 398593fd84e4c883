#pragma once

#include "korobov/params.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace korobov {

/// Multi-index h in Z^s labelling a Fourier mode.
class FrequencyIndex {
public:
    FrequencyIndex() = default;
    explicit FrequencyIndex(std::vector<std::int64_t> components) : c_(std::move(components)) {}
    FrequencyIndex(std::initializer_list<std::int64_t> components) : c_(components) {}
    static FrequencyIndex zero(int s) { return FrequencyIndex(std::vector<std::int64_t>(static_cast<std::size_t>(s), 0)); }

    std::size_t size() const noexcept { return c_.size(); }
    std::int64_t operator[](std::size_t j) const { return c_[j]; }
    std::int64_t& operator[](std::size_t j) { return c_[j]; }
    const std::vector<std::int64_t>& components() const noexcept { return c_; }
    bool is_zero() const noexcept;

    /// Lexicographic on the component vector (negatives before positives).
    auto operator<=>(const FrequencyIndex&) const = default;
    bool operator==(const FrequencyIndex&) const = default;

private:
    std::vector<std::int64_t> c_;
};

FrequencyIndex operator+(const FrequencyIndex& x, const FrequencyIndex& y);

/// Raw per-coordinate weights (a_j, b_j).  Index-set machinery runs on these
/// so that rescaled weights (e.g. a_j m_j^{b_j} on a dual lattice) can reuse
/// it without the monotonicity required of a space parameterization.
struct Weights {
    std::span<const double> a;
    std::span<const double> b;
    std::size_t size() const noexcept { return a.size(); }
};

inline Weights weights_of(const KorobovParams& params) { return {params.a(), params.b()}; }

/// a * |h|^b, with a zero term whenever h = 0 (also for a = +inf).
double coordinate_exponent(double a, double b, std::int64_t h);

/// sum_j a_j |h_j|^{b_j}; omega_h = omega^exponent.
double exponent(Weights w, const FrequencyIndex& h);
double exponent(const KorobovParams& params, const FrequencyIndex& h);

/// log(eps^-2) / log(omega^-1)
double x_of_eps(double omega, double eps);

/// Largest H >= 0 with a * H^b < x, or -1 when x <= 0.
std::int64_t max_abs_below(double a, double b, double x);

/// n(x,s) = |{h : sum_j a_j |h_j|^{b_j} < x}| through the dimension recurrence.
std::uint64_t count(Weights w, double x);
std::uint64_t count(const KorobovParams& params, double x);

/// As count(), but gives up once the count exceeds `cap`; returns nullopt then.
std::optional<std::uint64_t> count_capped(Weights w, double x, std::uint64_t cap);

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::optional<std::uint64_t> true_count)
        : std::runtime_error(what), true_count_(true_count) {}
    std::optional<std::uint64_t> true_count() const noexcept { return true_count_; }

private:
    std::optional<std::uint64_t> true_count_;
};

struct IndexEntry {
    FrequencyIndex h;
    double exponent;
};

/// Enumerated A(s,M) in exponent form: all h with exponent(h) < threshold_x.
///
/// Members are ordered by nondecreasing exponent, ties lexicographically.
struct IndexSet {
    double threshold_x = 0.0;
    std::vector<IndexEntry> members;

    std::size_t count() const noexcept { return members.size(); }
    bool contains(const FrequencyIndex& h) const;
};

IndexSet enumerate(Weights w, double x, std::uint64_t cap);
IndexSet enumerate(const KorobovParams& params, double x, std::uint64_t cap);

/// j(x) = sup{ j : x > a_j }.  `infinite` when every a_j is below x.
struct JIndex {
    bool infinite = false;
    std::int64_t value = 0;
    /// min(s, j(x))
    std::int64_t capped(int s) const noexcept { return infinite ? s : std::min<std::int64_t>(s, value); }
};

JIndex j_of_x(const KorobovParams& params, double x);

struct CountBounds {
    double lower;
    double upper;
};

/// Product sandwich for n(x,s).  Default split alpha_j = (j-1)/j, which makes
/// every lower factor use x/(a_j s).
CountBounds lemma1_bounds(const KorobovParams& params, double x,
                          std::optional<std::vector<double>> alphas = std::nullopt);

/// 3^{j_star} x^{B(s) + log 3 / delta}; requires a_j >= exp(delta j) for j_star <= j <= s.
double count_upper_pt(const KorobovParams& params, double x, double delta, std::int64_t j_star);

} // namespace korobov
