#pragma once

// One-dimensional weight series shared by the kernel, F_n, the eigenvalue
// bound and the dual-lattice sums.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace korobov::detail {

struct TruncatedSum {
    double value = 0.0;      // sum of the kept terms
    double tail_bound = 0.0; // certified bound on the dropped terms
    std::int64_t terms = 0;  // number of kept terms (h = 1..terms)
    double upper() const noexcept { return value + tail_bound; }
};

/// Tail bound sum_{h > H} omega^{c h^b} <= q^{H+1} / (1 - q) with
/// q = omega^{c H^{b-1}}, valid for b >= 1 since h^b >= H^{b-1} h for h >= H.
inline double power_tail_bound(double log_inv_omega, double c, double b, std::int64_t H) {
    const double Hd = static_cast<double>(std::max<std::int64_t>(H, 1));
    const double rate = c * std::pow(Hd, b - 1.0) * log_inv_omega; // -log q
    if (std::isinf(rate)) return 0.0;
    return std::exp(-rate * static_cast<double>(H + 1)) / -std::expm1(-rate);
}

/// sum_{h >= 1} omega^{c h^b} * g(h), truncated once the tail of the
/// majorant sum_{h} omega^{c h^b} drops below `tol`.  |g| <= 1 is assumed.
template <class Modulation>
TruncatedSum power_series(double log_inv_omega, double c, double b, double tol, Modulation&& g) {
    TruncatedSum out;
    if (std::isinf(c) || c * log_inv_omega > 745.0 * 2) return out;
    constexpr std::int64_t kMaxTerms = 50000000;
    for (std::int64_t h = 1;; ++h) {
        const double e = c * std::pow(static_cast<double>(h), b) * log_inv_omega;
        out.value += std::exp(-e) * g(h);
        out.terms = h;
        out.tail_bound = power_tail_bound(log_inv_omega, c, b, h);
        if (out.tail_bound <= tol) break;
        if (h >= kMaxTerms) throw std::runtime_error("weight series did not converge");
    }
    return out;
}

inline TruncatedSum power_series(double log_inv_omega, double c, double b, double tol) {
    return power_series(log_inv_omega, c, b, tol, [](std::int64_t) { return 1.0; });
}

/// log(1 + 2 sum_h omega^{c h^b}) as an upper bound (kept terms + tail).
inline double log_factor_upper(double log_inv_omega, double c, double b, double tol) {
    const auto s = power_series(log_inv_omega, c, b, tol);
    return std::log1p(2.0 * s.upper());
}

/// sum_{t >= 0, start + step t != skip} omega^{c (start + step t)^b}
/// (kept terms + certified tail).
inline TruncatedSum progression_sum(double log_inv_omega, double c, double b, double start, double step,
                                    double tol, double skip = -1.0) {
    TruncatedSum out;
    if (std::isinf(c)) {
        out.value = (start == 0.0 && skip != 0.0) ? 1.0 : 0.0;
        return out;
    }
    constexpr std::int64_t kMaxTerms = 50000000;
    for (std::int64_t t = 0;; ++t) {
        const double u = start + step * static_cast<double>(t);
        if (u != skip) out.value += std::exp(-c * std::pow(u, b) * log_inv_omega);
        out.terms = t + 1;
        // Beyond v = u + step: (v + step r)^b >= v^b + v^{b-1} step r.
        const double v = u + step;
        const double first = c * std::pow(v, b) * log_inv_omega;
        const double rate = c * std::pow(v, b - 1.0) * step * log_inv_omega;
        out.tail_bound = std::isinf(first) ? 0.0 : std::exp(-first) / -std::expm1(-rate);
        if (out.tail_bound <= tol && u >= skip) break;
        if (t >= kMaxTerms) throw std::runtime_error("weight series did not converge");
    }
    return out;
}

/// sum_{k in Z} omega^{c |h + m k|^b} split into the k = 0 term and the
/// rest; `rest` is an upper bound that includes its certified tail.
struct LineSum {
    double center = 0.0;
    double rest = 0.0;
};

inline LineSum coset_line_sum(double log_inv_omega, double c, double b, std::int64_t h, std::int64_t m,
                              double rel_tol = 1e-17) {
    LineSum out;
    const double ah = static_cast<double>(h < 0 ? -h : h);
    auto term = [&](double u) {
        if (std::isinf(c)) return u == 0.0 ? 1.0 : 0.0;
        return std::exp(-c * std::pow(u, b) * log_inv_omega);
    };
    out.center = term(ah);
    const double md = static_cast<double>(m);
    std::int64_t r = h % m;
    if (r < 0) r += m;
    const double rd = static_cast<double>(r);
    // {h + m k} = {r + m t : t >= 0} and {-(m - r) - m t : t >= 0}
    const double pos_start = rd;
    const double neg_start = md - rd;
    const double pos_skip = h >= 0 ? ah : -1.0;
    const double neg_skip = h < 0 ? ah : -1.0;
    // Smallest kept magnitude sets the truncation scale.
    double smallest = std::numeric_limits<double>::infinity();
    for (double u : {pos_start, pos_start + md, neg_start, neg_start + md})
        if (u != ah) smallest = std::min(smallest, u);
    const double tol = std::max(1e-300, rel_tol * term(smallest));
    out.rest = progression_sum(log_inv_omega, c, b, pos_start, md, tol, pos_skip).upper() +
               progression_sum(log_inv_omega, c, b, neg_start, md, tol, neg_skip).upper();
    return out;
}

} // namespace korobov::detail
