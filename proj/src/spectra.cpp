#include "korobov/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace korobov {

namespace {

struct Candidate {
    double exponent;
    std::vector<std::int64_t> magnitude; // |h_j|
    bool operator>(const Candidate& o) const {
        if (exponent != o.exponent) return exponent > o.exponent;
        return magnitude > o.magnitude;
    }
};

// All sign patterns of a nonnegative vector.
void sign_variants(const std::vector<std::int64_t>& magnitude, std::vector<FrequencyIndex>& out) {
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < magnitude.size(); ++j)
        if (magnitude[j] != 0) nonzero.push_back(j);
    const std::size_t patterns = std::size_t{1} << nonzero.size();
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        std::vector<std::int64_t> h = magnitude;
        for (std::size_t t = 0; t < nonzero.size(); ++t)
            if (mask & (std::size_t{1} << t)) h[nonzero[t]] = -h[nonzero[t]];
        out.emplace_back(std::move(h));
    }
}

double from_bits(std::uint64_t bits) { return std::bit_cast<double>(bits); }
std::uint64_t to_bits(double x) { return std::bit_cast<std::uint64_t>(x); }

} // namespace

Spectrum top_eigenvalues(const KorobovParams& params, std::size_t k) {
    if (k == 0) throw std::invalid_argument("top_eigenvalues needs k >= 1");
    const auto s = static_cast<std::size_t>(params.s());
    const Weights w = weights_of(params);
    const double L = params.log_inv_omega();

    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> frontier;
    std::set<std::vector<std::int64_t>> seen;
    frontier.push({0.0, std::vector<std::int64_t>(s, 0)});
    seen.insert(frontier.top().magnitude);

    Spectrum out;
    std::vector<FrequencyIndex> level;
    while (out.top.size() < k && !frontier.empty()) {
        // Drain one exponent level; children always sit strictly above it
        // because every a_j >= 1.
        const double e = frontier.top().exponent;
        level.clear();
        while (!frontier.empty() && frontier.top().exponent == e) {
            Candidate c = frontier.top();
            frontier.pop();
            sign_variants(c.magnitude, level);
            for (std::size_t j = 0; j < s; ++j) {
                auto next = c.magnitude;
                ++next[j];
                if (!seen.insert(next).second) continue;
                const double ne = exponent(w, FrequencyIndex(next));
                if (std::isinf(ne)) continue;
                frontier.push({ne, std::move(next)});
            }
        }
        std::sort(level.begin(), level.end());
        const double lambda = std::exp(-e * L);
        for (auto& h : level) {
            if (out.top.size() == k) break;
            out.top.push_back({lambda, e, std::move(h)});
        }
    }
    return out;
}

double nth_eigenvalue_exponent(const KorobovParams& params, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("eigenvalues are indexed from 1");
    const Weights w = weights_of(params);
    // reaches(x): #{h : exponent(h) < x} >= n
    auto reaches = [&](double x) { return !count_capped(w, x, n - 1).has_value(); };

    double hi = params.a()[0];
    while (!reaches(hi)) {
        hi *= 2.0;
        if (std::isinf(hi)) throw std::overflow_error("eigenvalue exponent search diverged");
    }
    // Invariant: !reaches(lo), reaches(hi).  Bisect on the ordered bit
    // patterns of nonnegative doubles so the search ends at adjacent values.
    std::uint64_t lo_bits = to_bits(0.0);
    std::uint64_t hi_bits = to_bits(hi);
    while (hi_bits - lo_bits > 1) {
        const std::uint64_t mid = lo_bits + (hi_bits - lo_bits) / 2;
        if (reaches(from_bits(mid)))
            hi_bits = mid;
        else
            lo_bits = mid;
    }
    // #{e < lo} < n <= #{e <= lo}: lo is the n-th smallest exponent.
    return from_bits(lo_bits);
}

double nth_minimal_log_inv_error_all(const KorobovParams& params, std::uint64_t n) {
    return 0.5 * params.log_inv_omega() * nth_eigenvalue_exponent(params, n + 1);
}

double nth_minimal_error_all(const KorobovParams& params, std::uint64_t n) {
    return std::exp(-nth_minimal_log_inv_error_all(params, n));
}

std::uint64_t info_complexity_all(const KorobovParams& params, double eps) {
    return count(params, x_of_eps(params.omega(), eps));
}

FourierPolynomial optimal_algorithm_all(const KorobovParams& params, double eps, const FourierPolynomial& f) {
    const double x = x_of_eps(params.omega(), eps);
    FourierPolynomial out(params);
    for (const auto& [h, c] : f.coefficients())
        if (exponent(params, h) < x) out.set(h, c);
    return out;
}

double eigenvalue_tail_bound(const KorobovParams& params, std::uint64_t n, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
    if (n == 0) throw std::invalid_argument("eigenvalues are indexed from 1");
    double log_sum = 0.0;
    for (double a : params.a()) {
        const double w = std::exp(-eta * a * params.log_inv_omega());
        log_sum += std::log1p(2.0 * w / -std::expm1(-eta * a * params.log_inv_omega()));
    }
    return std::exp((log_sum - std::log(static_cast<double>(n))) / eta);
}

} // namespace korobov
