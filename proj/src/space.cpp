#include "korobov/space.hpp"

#include "series.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace korobov {

namespace {

void check_dimension(const KorobovParams& params, std::size_t n, const char* what) {
    if (n != static_cast<std::size_t>(params.s())) {
        throw std::invalid_argument(std::string("dimension mismatch in ") + what);
    }
}

void check_same_space(const FourierPolynomial& f, const FourierPolynomial& g) {
    if (!(f.params() == g.params())) throw std::invalid_argument("params mismatch");
}

double wrap_unit(double t) {
    double r = t - std::floor(t);
    return r >= 1.0 ? 0.0 : r;
}

// Uniform double in (0,1] from the raw 64-bit stream (platform independent).
double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

} // namespace

FourierPolynomial::FourierPolynomial(KorobovParams params, Coefficients coefficients)
    : params_(std::move(params)), coeffs_(std::move(coefficients)) {
    for (const auto& [h, c] : coeffs_) check_dimension(params_, h.size(), "FourierPolynomial");
}

Complex FourierPolynomial::coefficient(const FrequencyIndex& h) const {
    auto it = coeffs_.find(h);
    return it == coeffs_.end() ? Complex{} : it->second;
}

void FourierPolynomial::add(const FrequencyIndex& h, Complex c) {
    check_dimension(params_, h.size(), "FourierPolynomial::add");
    coeffs_[h] += c;
}

void FourierPolynomial::set(const FrequencyIndex& h, Complex c) {
    check_dimension(params_, h.size(), "FourierPolynomial::set");
    coeffs_[h] = c;
}

Complex unit_phase(double t) {
    const double angle = 2.0 * std::numbers::pi * wrap_unit(t);
    return {std::cos(angle), std::sin(angle)};
}

double weight(const KorobovParams& params, const FrequencyIndex& h) {
    return std::exp(-exponent(params, h) * params.log_inv_omega());
}

FourierPolynomial basis_function(const KorobovParams& params, const FrequencyIndex& h) {
    FourierPolynomial f(params);
    f.set(h, std::exp(-0.5 * exponent(params, h) * params.log_inv_omega()));
    return f;
}

Complex kernel_eval(const KorobovParams& params, std::span<const double> x, std::span<const double> y,
                    double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("kernel tolerance must be positive");
    check_dimension(params, x.size(), "kernel_eval");
    check_dimension(params, y.size(), "kernel_eval");
    const double L = params.log_inv_omega();
    const auto s = static_cast<std::size_t>(params.s());

    // Each factor is bounded by U_j = 1 + 2 sum_h omega^{a_j h^{b_j}}.  If the
    // factor errors satisfy e_j <= tol / (2 s prod U), the product error stays
    // below prod U (exp(sum e_j / U_j) - 1) <= tol.
    double log_bound = 0.0;
    for (std::size_t j = 0; j < s; ++j)
        log_bound += detail::log_factor_upper(L, params.a()[j], params.b()[j], 1e-17);
    const double per_factor = std::min(tol, 1.0) / (2.0 * static_cast<double>(s) * std::exp(log_bound));

    double product = 1.0;
    for (std::size_t j = 0; j < s; ++j) {
        const double d = wrap_unit(x[j]) - wrap_unit(y[j]);
        const auto sum = detail::power_series(L, params.a()[j], params.b()[j], 0.5 * per_factor,
                                              [d](std::int64_t h) {
                                                  return std::cos(2.0 * std::numbers::pi *
                                                                  wrap_unit(static_cast<double>(h) * d));
                                              });
        product *= 1.0 + 2.0 * sum.value;
    }
    return {product, 0.0};
}

Complex evaluate(const FourierPolynomial& f, std::span<const double> x) {
    check_dimension(f.params(), x.size(), "evaluate");
    Complex sum{};
    for (const auto& [h, c] : f.coefficients()) {
        // Reduce each h_j x_j mod 1 separately to keep the phase accurate.
        double t = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) t += wrap_unit(static_cast<double>(h[j]) * wrap_unit(x[j]));
        sum += c * unit_phase(t);
    }
    return sum;
}

Complex inner(const FourierPolynomial& f, const FourierPolynomial& g) {
    check_same_space(f, g);
    const double L = f.params().log_inv_omega();
    Complex sum{};
    for (const auto& [h, c] : f.coefficients()) {
        auto it = g.coefficients().find(h);
        if (it == g.coefficients().end()) continue;
        sum += c * std::conj(it->second) * std::exp(exponent(f.params(), h) * L);
    }
    return sum;
}

double norm(const FourierPolynomial& f) {
    const double L = f.params().log_inv_omega();
    double sum = 0.0;
    for (const auto& [h, c] : f.coefficients()) sum += std::norm(c) * std::exp(exponent(f.params(), h) * L);
    return std::sqrt(sum);
}

double l2_norm(const FourierPolynomial& f) {
    double sum = 0.0;
    for (const auto& [h, c] : f.coefficients()) sum += std::norm(c);
    return std::sqrt(sum);
}

FourierPolynomial difference(const FourierPolynomial& f, const FourierPolynomial& g) {
    check_same_space(f, g);
    FourierPolynomial out = f;
    for (const auto& [h, c] : g.coefficients()) out.add(h, -c);
    return out;
}

FourierPolynomial kernel_section(const KorobovParams& params, std::span<const double> x,
                                 const std::vector<FrequencyIndex>& support) {
    check_dimension(params, x.size(), "kernel_section");
    FourierPolynomial k(params);
    for (const auto& h : support) {
        double t = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) t += wrap_unit(static_cast<double>(h[j]) * wrap_unit(x[j]));
        k.set(h, weight(params, h) * unit_phase(-t));
    }
    return k;
}

FourierPolynomial random_unit_ball(const KorobovParams& params, const std::vector<FrequencyIndex>& support,
                                   std::uint64_t seed) {
    if (support.empty()) throw std::invalid_argument("random_unit_ball: empty support");
    std::mt19937_64 rng(seed);
    FourierPolynomial f(params);
    for (const auto& h : support) {
        // Box-Muller on the raw engine output.
        const double r = std::sqrt(-2.0 * std::log(uniform_open(rng)));
        const double theta = 2.0 * std::numbers::pi * uniform_open(rng);
        // Scale by omega_h^{1/2} so every mode contributes to the H-norm evenly.
        const double w = std::exp(-0.5 * exponent(params, h) * params.log_inv_omega());
        f.set(h, w * Complex{r * std::cos(theta), r * std::sin(theta)});
    }
    const double n = norm(f);
    FourierPolynomial out(params);
    for (const auto& [h, c] : f.coefficients()) out.set(h, c / n);
    return out;
}

FourierPolynomial random_unit_ball(const KorobovParams& params, const IndexSet& support, std::uint64_t seed) {
    std::vector<FrequencyIndex> hs;
    hs.reserve(support.members.size());
    for (const auto& e : support.members) hs.push_back(e.h);
    return random_unit_ball(params, hs, seed);
}

} // namespace korobov
