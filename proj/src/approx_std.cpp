#include "korobov/approx_std.hpp"

#include "korobov/spectra.hpp"
#include "series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace korobov {

namespace {

void check_grid(const KorobovParams& params, const RegularGrid& grid) {
    if (grid.dimension() != static_cast<std::size_t>(params.s()))
        throw std::invalid_argument("grid dimension differs from space dimension");
}

// ceil/floor that treat values within a few ulps of an integer as that integer.
double snap(double y) {
    const double r = std::round(y);
    return std::abs(y - r) <= 1e-12 * std::max(1.0, std::abs(y)) ? r : y;
}

// Largest t >= 0 with t^p <= m.
std::int64_t floor_root(double m, double p) {
    auto t = static_cast<std::int64_t>(std::floor(snap(std::pow(m, 1.0 / p))));
    while (snap(std::pow(static_cast<double>(t + 1), p)) <= m) ++t;
    while (t > 0 && snap(std::pow(static_cast<double>(t), p)) > m) --t;
    return t;
}

double log_D(const KorobovParams& params) {
    const double L = params.log_inv_omega();
    double out = static_cast<double>(params.s()) * std::log(4.0);
    for (double b : params.b()) out += std::log1p(std::pow(L, -1.0 / b));
    return out;
}

// log(log(1 + exp(y)))
double log_log1p_exp(double y) {
    if (y < -700.0) return y;
    return std::log(std::log1p(std::exp(y)));
}

} // namespace

double threshold_of_M(const KorobovParams& params, double M) { return std::log(M) / params.log_inv_omega(); }

StdAlgorithm make_std_algorithm(const KorobovParams& params, double M, RegularGrid grid, std::uint64_t set_cap) {
    if (!(M > 1.0)) throw std::invalid_argument("M must exceed 1");
    check_grid(params, grid);
    IndexSet set = enumerate(params, threshold_of_M(params, M), set_cap);
    return {params, M, std::move(grid), std::move(set)};
}

FourierPolynomial apply(const StdAlgorithm& alg, const FourierPolynomial& f, std::uint64_t cap) {
    const auto samples = sample(alg.grid, f, cap);
    std::map<std::vector<std::int64_t>, Complex> by_coset;
    FourierPolynomial out(alg.params);
    for (const auto& entry : alg.index_set.members) {
        auto key = coset_of(alg.grid, entry.h);
        auto it = by_coset.find(key);
        if (it == by_coset.end())
            it = by_coset.emplace(std::move(key), aliased_coefficient(alg.grid, samples, entry.h)).first;
        out.set(entry.h, it->second);
    }
    return out;
}

double D_constant(const KorobovParams& params) { return std::exp(log_D(params)); }

double error_upper_bound(const StdAlgorithm& alg) {
    const double F = f_n(alg.params, alg.grid);
    const double inv_M = 1.0 / alg.M;
    if (F == 0.0) return std::sqrt(inv_M);
    const double log_term = (alg.params.B_s() + 1.0) * std::log(alg.M) + log_D(alg.params) + std::log(F);
    return std::sqrt(inv_M + std::exp(log_term));
}

double error_bound_set_size(const StdAlgorithm& alg) {
    const double F = f_n(alg.params, alg.grid);
    return std::sqrt(1.0 / alg.M + alg.M * static_cast<double>(alg.index_set.count()) * F);
}

double gen_approx_bound(const StdAlgorithm& alg) {
    const auto& params = alg.params;
    const double L = params.log_inv_omega();
    const auto s = static_cast<std::size_t>(params.s());
    std::vector<std::map<std::int64_t, detail::LineSum>> cache(s);
    double total = 0.0;
    for (const auto& entry : alg.index_set.members) {
        // prod_j (t_j + r_j) - prod_j t_j accumulated without cancellation.
        double base = 1.0;
        double diff = 0.0;
        for (std::size_t j = 0; j < s; ++j) {
            const std::int64_t h = entry.h[j];
            auto it = cache[j].find(h);
            if (it == cache[j].end())
                it = cache[j]
                         .emplace(h, detail::coset_line_sum(L, params.a()[j], params.b()[j], h, alg.grid.mesh()[j]))
                         .first;
            const auto [t, r] = it->second;
            diff = diff * (t + r) + base * r;
            base *= t;
        }
        total += diff;
    }
    return std::sqrt(1.0 / alg.M + total);
}

PropositionMesh mesh_proposition(const KorobovParams& params, double eps, std::uint64_t cap) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
    const double B = params.B_s();
    const double L = params.log_inv_omega();
    const double s = static_cast<double>(params.s());
    const double logD = log_D(params);

    const double log_eta = 0.5 * (B + 2.0) * (2.0 * std::log(eps) - std::log(2.0) - logD / (B + 2.0));
    // log(1 + 2s / log(1 + eta^2)) through logs, since eta^2 underflows early.
    const double log_q = std::log(2.0 * s) - log_log1p_exp(2.0 * log_eta);
    const double log_term = log_q + std::log1p(std::exp(-log_q));

    double m = 0.0;
    for (int j = 0; j < params.s(); ++j) {
        const double b = params.b()[static_cast<std::size_t>(j)];
        const double a = params.a()[static_cast<std::size_t>(j)];
        const double base = std::pow(4.0, b) / a * log_term / L;
        m = std::max(m, std::ceil(snap(std::pow(base, B))));
    }
    if (!std::isfinite(m) || m > 9.0e15) throw std::overflow_error("proposition mesh parameter overflows");

    std::vector<std::int64_t> mesh;
    bool clamped = false;
    for (double b : params.b()) {
        std::int64_t mj = floor_root(m, B * b);
        if (mj < 1) {
            mj = 1;
            clamped = true;
        }
        mesh.push_back(mj);
    }
    RegularGrid grid(std::move(mesh));
    if (grid.n() > cap) {
        throw CapExceeded("proposition grid has " + std::to_string(grid.n()) + " points, cap is " +
                              std::to_string(cap),
                          grid.n());
    }
    return {std::move(grid), 2.0 / (eps * eps), m, std::exp(log_eta), clamped};
}

RegularGrid mesh_spt(const KorobovParams& params, double M, double beta) {
    if (!(M > 1.0)) throw std::invalid_argument("M must exceed 1");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0,1)");
    const double L = params.log_inv_omega();
    const double logM = std::log(M);
    std::vector<std::int64_t> mesh;
    for (int j = 0; j < params.s(); ++j) {
        const double a = params.a()[static_cast<std::size_t>(j)];
        const double b = params.b()[static_cast<std::size_t>(j)];
        const double y = std::pow(logM / (std::pow(a, beta) * L), 1.0 / b);
        const double c = std::ceil(snap(y));
        if (!(c < 4.0e18)) throw std::overflow_error("mesh size exceeds 64-bit integers");
        mesh.push_back(2 * static_cast<std::int64_t>(c) - 1);
    }
    return RegularGrid(std::move(mesh));
}

bool resolves(const RegularGrid& grid, const IndexSet& set) {
    for (const auto& entry : set.members)
        for (std::size_t j = 0; j < grid.dimension(); ++j) {
            const std::int64_t h = entry.h[j] < 0 ? -entry.h[j] : entry.h[j];
            if (2 * h >= grid.mesh()[j] + 1) return false;
        }
    return true;
}

double default_trunc_x(const StdAlgorithm& alg) {
    const double x = alg.index_set.threshold_x;
    // log(eps^{-1}) = log(M) / 2
    return x + 3.0 * 0.5 * std::log(alg.M) / alg.params.log_inv_omega();
}

namespace {

struct CosetMember {
    FrequencyIndex g;
    double exponent;
    bool in_A;
};

// Members g of the coset `residues` + dual lattice with exponent(g) < trunc.
void enumerate_coset(const KorobovParams& params, const RegularGrid& grid, const std::vector<std::int64_t>& residues,
                     double trunc, std::size_t cap, std::vector<CosetMember>& out) {
    const auto s = residues.size();
    std::vector<std::vector<std::pair<std::int64_t, double>>> line(s);
    for (std::size_t j = 0; j < s; ++j) {
        const double a = params.a()[j];
        const double b = params.b()[j];
        const std::int64_t H = max_abs_below(a, b, trunc);
        const std::int64_t m = grid.mesh()[j];
        for (std::int64_t v = residues[j]; v <= H; v += m) line[j].emplace_back(v, coordinate_exponent(a, b, v));
        for (std::int64_t v = residues[j] - m; v >= -H; v -= m)
            line[j].emplace_back(v, coordinate_exponent(a, b, v));
    }
    std::vector<std::int64_t> current(s);
    auto rec = [&](auto&& self, std::size_t j, double used) -> void {
        if (j == s) {
            if (out.size() >= cap)
                throw CapExceeded("coset exceeds " + std::to_string(cap) + " frequencies", std::nullopt);
            FrequencyIndex g(current);
            const double e = exponent(params, g);
            if (e < trunc) out.push_back({std::move(g), e, false});
            return;
        }
        for (const auto& [v, e] : line[j]) {
            if (used + e >= trunc * (1.0 + 1e-15)) continue;
            current[j] = v;
            self(self, j + 1, used + e);
        }
    };
    rec(rec, 0, 0.0);
}

// log of sum_{g in coset} omega^{theta e(g)}
double log_coset_mass(const KorobovParams& params, const RegularGrid& grid, const std::vector<std::int64_t>& residues,
                      double theta) {
    const double L = params.log_inv_omega();
    double out = 0.0;
    for (std::size_t j = 0; j < residues.size(); ++j) {
        const auto line = detail::coset_line_sum(L, theta * params.a()[j], params.b()[j], residues[j], grid.mesh()[j]);
        out += std::log(line.center + line.rest);
    }
    return out;
}

// Upper bound on sum_{g in coset, e(g) >= trunc} omega_g.
double coset_tail(const KorobovParams& params, const RegularGrid& grid, const std::vector<std::int64_t>& residues,
                  double trunc) {
    const double L = params.log_inv_omega();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 19; ++i) {
        const double theta = 0.05 * i;
        best = std::min(best, -(1.0 - theta) * trunc * L + log_coset_mass(params, grid, residues, theta));
    }
    return std::exp(best);
}

} // namespace

OracleResult exact_worst_case_error(const StdAlgorithm& alg, double trunc_x, std::size_t coset_cap) {
    const auto& params = alg.params;
    const double x = alg.index_set.threshold_x;
    if (!(trunc_x > x)) throw std::invalid_argument("trunc_x must exceed the index set threshold");
    const double L = params.log_inv_omega();

    // Cosets missing A contribute exactly their largest omega_g; the overall
    // largest omega_g off A is attained at the (|A|+1)-th exponent, and no
    // coset through such g has a smaller top eigenvalue.
    const double x_star = nth_eigenvalue_exponent(params, alg.index_set.count() + 1);
    const double discarded = std::exp(-x_star * L);

    std::map<std::vector<std::int64_t>, std::vector<const FrequencyIndex*>> cosets;
    for (const auto& entry : alg.index_set.members) cosets[coset_of(alg.grid, entry.h)].push_back(&entry.h);

    double lambda_max = discarded;
    double upper = std::sqrt(discarded);
    std::size_t max_dim = 0;
    std::vector<CosetMember> members;
    for (const auto& [residues, in_A] : cosets) {
        members.clear();
        enumerate_coset(params, alg.grid, residues, trunc_x, coset_cap, members);
        std::size_t k = 0;
        for (auto& mem : members) {
            mem.in_A = std::any_of(in_A.begin(), in_A.end(), [&](const FrequencyIndex* h) { return *h == mem.g; });
            k += mem.in_A ? 1 : 0;
        }
        if (k != in_A.size()) throw std::logic_error("coset enumeration lost members of A");
        const auto dim = static_cast<Eigen::Index>(members.size());
        max_dim = std::max(max_dim, members.size());

        Eigen::VectorXd d(dim), dA(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            d(i) = std::exp(-0.5 * members[static_cast<std::size_t>(i)].exponent * L);
            dA(i) = members[static_cast<std::size_t>(i)].in_A ? d(i) : 0.0;
        }
        // T[h,g] = d_h [h=g] - [h in A] d_g, so T^T T = D^2 - dA d^T - d dA^T + k d d^T.
        Eigen::MatrixXd G = (static_cast<double>(k) * d) * d.transpose() - dA * d.transpose() - d * dA.transpose();
        G.diagonal() += d.cwiseProduct(d);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(G, Eigen::EigenvaluesOnly);
        const double lambda = std::max(0.0, solver.eigenvalues().maxCoeff());
        const double rounding = 4.0 * static_cast<double>(dim) * DBL_EPSILON * G.norm();

        lambda_max = std::max(lambda_max, lambda);
        const double tail = coset_tail(params, alg.grid, residues, trunc_x);
        upper = std::max(upper, std::sqrt(lambda + rounding) + std::sqrt((static_cast<double>(k) + 1.0) * tail));
    }
    const double value = std::sqrt(lambda_max);
    return {value, std::max(0.0, upper - value), cosets.size(), max_dim, discarded};
}

} // namespace korobov
