#pragma once

#include "korobov/approx_std.hpp"
#include "korobov/grid.hpp"
#include "korobov/params.hpp"
#include "korobov/space.hpp"

#include <cstdint>
#include <optional>

namespace korobov {

/// Equal-weight rule on a regular grid: Q(f) = weight * sum_k f(x_k).
struct GridRule {
    RegularGrid grid;
    double weight; // 1/n for the plain grid rule

    static GridRule uniform(RegularGrid grid);
};

/// Q(f), streaming over the grid.
Complex integrate(const GridRule& rule, const FourierPolynomial& f, std::uint64_t cap = kDefaultGridCap);

struct IntErrorResult {
    double value; // sqrt of the truncated dual-lattice sum
    double slack; // true error <= value + slack
};

/// sup_{||f|| <= 1} |int f - (1/n) sum_k f(x_k)| = sqrt(sum_{l in dual, l != 0} omega_l),
/// summed over dual points with exponent < trunc_x plus a certified tail.
IntErrorResult worst_case_int_error(const KorobovParams& params, const GridRule& rule, double trunc_x,
                                    std::uint64_t set_cap = 1000000);

/// Extremal integrand: coefficients omega_l / sqrt(sum omega_l) on the truncated dual lattice.
FourierPolynomial extremal_integrand(const KorobovParams& params, const RegularGrid& grid, double trunc_x,
                                     std::uint64_t set_cap = 1000000);

/// Rule induced by A_{n,s,M}: beta_k = int alpha_k = (1/n) [0 in A(s,M)].
GridRule induced_int_rule(const StdAlgorithm& alg);

/// 2^{-s/2} omega^{(a_1 + ... + a_s)/2} when n < 2^s, nullopt otherwise.
std::optional<double> int_lower_bound(const KorobovParams& params, std::uint64_t n);

} // namespace korobov
