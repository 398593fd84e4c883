#pragma once

#include "korobov/index_set.hpp"
#include "korobov/params.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace korobov {

using Complex = std::complex<double>;
using Point = std::vector<double>;

/// Finitely supported element f = sum_h c_h exp(2 pi i h.x) of the space.
class FourierPolynomial {
public:
    using Coefficients = std::map<FrequencyIndex, Complex>;

    explicit FourierPolynomial(KorobovParams params) : params_(std::move(params)) {}
    FourierPolynomial(KorobovParams params, Coefficients coefficients);

    const KorobovParams& params() const noexcept { return params_; }
    const Coefficients& coefficients() const noexcept { return coeffs_; }
    std::size_t support_size() const noexcept { return coeffs_.size(); }

    /// Coefficient at h (zero off the support).
    Complex coefficient(const FrequencyIndex& h) const;
    /// Adds c to the coefficient at h.
    void add(const FrequencyIndex& h, Complex c);
    void set(const FrequencyIndex& h, Complex c);

private:
    KorobovParams params_;
    Coefficients coeffs_;
};

/// omega_h^{1/2} exp(2 pi i h.x): the orthonormal basis element for h.
FourierPolynomial basis_function(const KorobovParams& params, const FrequencyIndex& h);

/// omega_h = omega^exponent(h)
double weight(const KorobovParams& params, const FrequencyIndex& h);

/// K(x,y) with per-coordinate truncation certified to contribute < tol in total.
Complex kernel_eval(const KorobovParams& params, std::span<const double> x, std::span<const double> y,
                    double tol = 1e-14);

Complex evaluate(const FourierPolynomial& f, std::span<const double> x);

Complex inner(const FourierPolynomial& f, const FourierPolynomial& g);
double norm(const FourierPolynomial& f);

/// ||f||_{L2([0,1]^s)} via Parseval.
double l2_norm(const FourierPolynomial& f);
/// f - g (same params).
FourierPolynomial difference(const FourierPolynomial& f, const FourierPolynomial& g);

/// Coefficients omega_h exp(-2 pi i h.x) of K(., x) restricted to `support`.
FourierPolynomial kernel_section(const KorobovParams& params, std::span<const double> x,
                                 const std::vector<FrequencyIndex>& support);

/// Gaussian coefficients on `support`, rescaled to unit norm.  Deterministic in seed.
FourierPolynomial random_unit_ball(const KorobovParams& params, const IndexSet& support, std::uint64_t seed);
FourierPolynomial random_unit_ball(const KorobovParams& params, const std::vector<FrequencyIndex>& support,
                                   std::uint64_t seed);

/// exp(2 pi i t) with t reduced mod 1 first.
Complex unit_phase(double t);

} // namespace korobov
