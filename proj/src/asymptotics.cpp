#include "korobov/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace korobov {

namespace {

using Kind = SequenceFamily::Kind;
using Tail = SequenceFamily::Tail;

// Relative widening applied to floating partial sums.
constexpr double kSumSlack = 1e-13;

// Closed-form limit for a family of the form c * g(j) where g -> inf, 1 or 0.
ExtendedValue growth_limit(double c, double rate_sign_value, double at_zero) {
    if (rate_sign_value > 0.0) return c > 0.0 ? ExtendedValue::infinite() : ExtendedValue::finite(0.0);
    if (rate_sign_value == 0.0) return ExtendedValue::finite(at_zero);
    return ExtendedValue::finite(0.0);
}

Interval widen(double lo, double hi) {
    return {lo * (1.0 - kSumSlack), hi * (1.0 + kSumSlack)};
}

SeriesValue finite_series(double lo, double hi) { return {Status::finite, widen(lo, hi)}; }
SeriesValue infinite_series() { return {Status::infinite, {}}; }

} // namespace

ExtendedValue limit(const SequenceFamily& f) {
    switch (f.kind()) {
    case Kind::constant:
        return ExtendedValue::finite(f.c());
    case Kind::power:
        return growth_limit(f.c(), f.p(), f.c());
    case Kind::geometric:
        return growth_limit(f.c(), f.p() - 1.0, f.c());
    case Kind::exponential:
        return growth_limit(f.c(), f.p(), f.c());
    case Kind::superexponential:
        return growth_limit(f.c(), f.p(), f.c());
    case Kind::explicit_list:
        switch (f.tail()) {
        case Tail::repeat_last: return ExtendedValue::finite(f.values().back());
        case Tail::continuation: return limit(*f.continuation());
        case Tail::none: return ExtendedValue::unknown();
        }
    }
    return ExtendedValue::unknown();
}

ExtendedValue liminf_log_over_index(const SequenceFamily& f) {
    switch (f.kind()) {
    case Kind::constant:
    case Kind::power:
        return ExtendedValue::finite(0.0);
    case Kind::geometric:
        return ExtendedValue::finite(std::log(f.p()));
    case Kind::exponential:
        return ExtendedValue::finite(f.p());
    case Kind::superexponential:
        if (f.q() > 1.0 && f.p() > 0.0) return ExtendedValue::infinite();
        if (f.q() > 1.0 && f.p() < 0.0) return ExtendedValue::finite(-std::numeric_limits<double>::infinity());
        return ExtendedValue::finite(f.p());
    case Kind::explicit_list:
        switch (f.tail()) {
        case Tail::repeat_last: return ExtendedValue::finite(0.0);
        case Tail::continuation: return liminf_log_over_index(*f.continuation());
        case Tail::none: return ExtendedValue::unknown();
        }
    }
    return ExtendedValue::unknown();
}

SeriesValue reciprocal_tail_sum(const SequenceFamily& f, std::int64_t first) {
    first = std::max<std::int64_t>(first, 1);
    switch (f.kind()) {
    case Kind::constant:
        return infinite_series();

    case Kind::power: {
        const double k = f.p();
        if (k <= 1.0) return infinite_series();
        // Partial sum up to `last`, then integral comparison for the tail:
        //   int_L^inf g <= sum_{j>=L} g(j) <= g(L) + int_L^inf g   (g decreasing)
        const std::int64_t last = std::max<std::int64_t>(first, 100000);
        double partial = 0.0;
        for (std::int64_t j = first; j < last; ++j) partial += 1.0 / f.term(j);
        const double L = static_cast<double>(last);
        const double integral = std::pow(L, 1.0 - k) / (f.c() * (k - 1.0));
        return finite_series(partial + integral, partial + integral + 1.0 / f.term(last));
    }

    case Kind::geometric:
    case Kind::exponential: {
        const double r = f.kind() == Kind::geometric ? f.p() : std::exp(f.p());
        if (r <= 1.0) return infinite_series();
        const double s = std::pow(r, -static_cast<double>(first)) / (f.c() * (1.0 - 1.0 / r));
        return finite_series(s, s);
    }

    case Kind::superexponential: {
        if (f.p() <= 0.0) return infinite_series();
        // Ratio of consecutive terms is at most exp(-alpha) because j^k grows
        // at least linearly, so a geometric bound closes the tail.
        const double ratio = std::exp(-f.p());
        double partial = 0.0;
        std::int64_t j = first;
        for (; j < first + 100000; ++j) {
            const double t = 1.0 / f.term(j);
            if (t < 1e-300 || t < 1e-18 * partial) break;
            partial += t;
        }
        const double tail = (1.0 / f.term(j)) / (1.0 - ratio);
        return finite_series(partial, partial + tail);
    }

    case Kind::explicit_list: {
        const auto& v = f.values();
        const auto listed = static_cast<std::int64_t>(v.size());
        double partial = 0.0;
        for (std::int64_t j = first; j <= listed; ++j) partial += 1.0 / v[static_cast<std::size_t>(j - 1)];
        switch (f.tail()) {
        case Tail::repeat_last:
            return infinite_series();
        case Tail::none:
            return {Status::unknown, {}};
        case Tail::continuation: {
            auto rest = reciprocal_tail_sum(*f.continuation(), std::max(first, listed + 1));
            if (rest.status != Status::finite) return rest;
            return finite_series(partial + rest.bracket.lo, partial + rest.bracket.hi);
        }
        }
    }
    }
    return {Status::unknown, {}};
}

} // namespace korobov
