#include "korobov/integrate.hpp"

#include "series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace korobov {

GridRule GridRule::uniform(RegularGrid grid) {
    const double w = 1.0 / grid.n_real();
    return {std::move(grid), w};
}

Complex integrate(const GridRule& rule, const FourierPolynomial& f, std::uint64_t cap) {
    const auto values = sample(rule.grid, f, cap);
    Complex sum{};
    for (const auto& v : values) sum += v;
    return rule.weight * sum;
}

namespace {

// Dual points l = (m_j k_j) carry exponent sum_j a_j m_j^{b_j} |k_j|^{b_j}.
std::vector<double> dual_weights(const KorobovParams& params, const RegularGrid& grid) {
    if (grid.dimension() != static_cast<std::size_t>(params.s()))
        throw std::invalid_argument("grid dimension differs from space dimension");
    std::vector<double> a(grid.dimension());
    for (std::size_t j = 0; j < a.size(); ++j)
        a[j] = params.a()[j] * std::pow(static_cast<double>(grid.mesh()[j]), params.b()[j]);
    return a;
}

// sum_{e(k) >= trunc} omega^{e(k)} <= omega^{(1-theta) trunc} prod_j (1 + 2 sum_h omega^{theta a_j h^{b_j}})
double dual_tail(const KorobovParams& params, const std::vector<double>& a, double trunc) {
    const double L = params.log_inv_omega();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 19; ++i) {
        const double theta = 0.05 * i;
        double log_mass = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            log_mass += detail::log_factor_upper(L, theta * a[j], params.b()[j], 1e-300);
        best = std::min(best, -(1.0 - theta) * trunc * L + log_mass);
    }
    return std::exp(best);
}

} // namespace

IntErrorResult worst_case_int_error(const KorobovParams& params, const GridRule& rule, double trunc_x,
                                    std::uint64_t set_cap) {
    if (!(trunc_x > 0.0)) throw std::invalid_argument("trunc_x must be positive");
    const auto a = dual_weights(params, rule.grid);
    const Weights w{a, params.b()};
    const IndexSet dual = enumerate(w, trunc_x, set_cap);
    const double L = params.log_inv_omega();
    double sum = 0.0;
    // Smallest terms first.
    for (auto it = dual.members.rbegin(); it != dual.members.rend(); ++it)
        if (!it->h.is_zero()) sum += std::exp(-it->exponent * L);
    const double value = std::sqrt(sum);
    const double tail = dual_tail(params, a, trunc_x);
    return {value, std::sqrt(sum + tail) - value};
}

FourierPolynomial extremal_integrand(const KorobovParams& params, const RegularGrid& grid, double trunc_x,
                                     std::uint64_t set_cap) {
    const auto a = dual_weights(params, grid);
    const IndexSet dual = enumerate(Weights{a, params.b()}, trunc_x, set_cap);
    const double L = params.log_inv_omega();
    double sum = 0.0;
    for (const auto& e : dual.members)
        if (!e.h.is_zero()) sum += std::exp(-e.exponent * L);
    FourierPolynomial f(params);
    if (sum == 0.0) return f;
    const double scale = 1.0 / std::sqrt(sum);
    for (const auto& e : dual.members) {
        if (e.h.is_zero()) continue;
        std::vector<std::int64_t> l(e.h.size());
        for (std::size_t j = 0; j < l.size(); ++j) l[j] = e.h[j] * grid.mesh()[j];
        f.set(FrequencyIndex(std::move(l)), std::exp(-e.exponent * L) * scale);
    }
    return f;
}

GridRule induced_int_rule(const StdAlgorithm& alg) {
    // Only alpha_k's h = 0 mode integrates to a nonzero value.
    const bool has_zero = alg.index_set.contains(FrequencyIndex::zero(alg.params.s()));
    return {alg.grid, has_zero ? 1.0 / alg.grid.n_real() : 0.0};
}

std::optional<double> int_lower_bound(const KorobovParams& params, std::uint64_t n) {
    const int s = params.s();
    if (s < 64 && n >= (std::uint64_t{1} << s)) return std::nullopt;
    double sum_a = 0.0;
    for (double a : params.a()) sum_a += a;
    return std::exp(-0.5 * static_cast<double>(s) * std::log(2.0) - 0.5 * sum_a * params.log_inv_omega());
}

} // namespace korobov
