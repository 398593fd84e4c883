#pragma once

#include "korobov/grid.hpp"
#include "korobov/index_set.hpp"
#include "korobov/params.hpp"
#include "korobov/space.hpp"

#include <cstdint>
#include <optional>

namespace korobov {

inline constexpr std::uint64_t kDefaultSetCap = 1000000;
inline constexpr std::size_t kDefaultCosetCap = 2000;

/// A_{n,s,M}: sample on a regular grid, keep the aliased coefficients on A(s,M).
struct StdAlgorithm {
    KorobovParams params;
    double M;
    RegularGrid grid;
    IndexSet index_set; // A(s,M), threshold_x = log M / log omega^{-1}
};

StdAlgorithm make_std_algorithm(const KorobovParams& params, double M, RegularGrid grid,
                                std::uint64_t set_cap = kDefaultSetCap);

/// log M / log omega^{-1}
double threshold_of_M(const KorobovParams& params, double M);

/// Output coefficient at h in A equals aliased_coefficient(grid, f, h).
FourierPolynomial apply(const StdAlgorithm& alg, const FourierPolynomial& f,
                        std::uint64_t cap = kDefaultGridCap);

/// D(s, omega, b) = 4^s prod_j (1 + (log omega^{-1})^{-1/b_j})
double D_constant(const KorobovParams& params);

/// sqrt(1/M + M^{B(s)+1} D F_n)
double error_upper_bound(const StdAlgorithm& alg);

/// sqrt(1/M + M |A(s,M)| F_n)
double error_bound_set_size(const StdAlgorithm& alg);

/// sqrt(1/M + sum_{h in A} sum_{l in dual, l != 0} omega_{h+l}), with each
/// inner sum evaluated in product form.
double gen_approx_bound(const StdAlgorithm& alg);

struct ErrorReport {
    double upper_bound;
    std::optional<double> exact;
    std::uint64_t n_points;
    std::uint64_t set_size;
};

struct PropositionMesh {
    RegularGrid grid;
    double M;       // 2 / eps^2
    double m;       // max_j ceil(...^{B(s)})
    double eta;
    bool clamped;   // some m_j floored to 0 and was raised to 1
};

/// Mesh sizes of the fixed-dimension construction; throws CapExceeded when
/// n = prod m_j exceeds `cap`.
PropositionMesh mesh_proposition(const KorobovParams& params, double eps, std::uint64_t cap = kDefaultGridCap);

/// m_j = 2 ceil((log M / (a_j^beta log omega^{-1}))^{1/b_j}) - 1 (always odd).
RegularGrid mesh_spt(const KorobovParams& params, double M, double beta);

/// True when |h_j| < (m_j + 1)/2 for all h in the set and all j.
bool resolves(const RegularGrid& grid, const IndexSet& set);

struct OracleResult {
    double value;               // worst-case L2 error of the truncated problem
    double slack;               // true error <= value + slack
    std::size_t cosets_solved;  // cosets meeting A(s,M)
    std::size_t max_coset_dim;
    double largest_discarded;   // omega^{x*} with x* the smallest exponent >= threshold
};

/// threshold_x + 3 log(eps^{-1}) / log(omega^{-1}) with eps = M^{-1/2}.
double default_trunc_x(const StdAlgorithm& alg);

/// Exact worst-case error of alg over the unit ball: the maximum over cosets
/// of the dual lattice of the top singular value of the per-coset error map,
/// with frequencies of exponent >= trunc_x handled by a certified slack.
OracleResult exact_worst_case_error(const StdAlgorithm& alg, double trunc_x,
                                    std::size_t coset_cap = kDefaultCosetCap);

} // namespace korobov
