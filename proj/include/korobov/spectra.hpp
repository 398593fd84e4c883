#pragma once

#include "korobov/index_set.hpp"
#include "korobov/params.hpp"
#include "korobov/space.hpp"

#include <cstdint>
#include <vector>

namespace korobov {

struct Eigenpair {
    double eigenvalue; // omega_h (may underflow to 0; exponent is exact)
    double exponent;   // sum_j a_j |h_j|^{b_j}
    FrequencyIndex index;
};

/// Leading eigenpairs of the embedding's Gram operator, nonincreasing;
/// equal eigenvalues appear in lexicographic index order.
struct Spectrum {
    std::vector<Eigenpair> top;
};

/// k largest omega_h by best-first search over |h| in N^s.
Spectrum top_eigenvalues(const KorobovParams& params, std::size_t k);

/// Exponent of lambda_{s,n} (1-based), located by bisection on the counting
/// function instead of the spectrum.
double nth_eigenvalue_exponent(const KorobovParams& params, std::uint64_t n);

/// e(n) = sqrt(lambda_{s,n+1}); e(0) = 1.
double nth_minimal_error_all(const KorobovParams& params, std::uint64_t n);
/// log(1 / e(n)), which stays finite where e(n) underflows.
double nth_minimal_log_inv_error_all(const KorobovParams& params, std::uint64_t n);

/// |A(s, eps^-2)| = n(x(eps), s)
std::uint64_t info_complexity_all(const KorobovParams& params, double eps);

/// Truncated Fourier series of f onto A(s, eps^-2).
FourierPolynomial optimal_algorithm_all(const KorobovParams& params, double eps, const FourierPolynomial& f);

/// [prod_j (1 + 2 w_j / (1 - w_j))]^{1/eta} / n^{1/eta} with w_j = omega^{eta a_j}:
/// an upper bound for lambda_{s,n}.
double eigenvalue_tail_bound(const KorobovParams& params, std::uint64_t n, double eta);

} // namespace korobov
