#include "korobov/grid.hpp"

#include "series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace korobov {

RegularGrid::RegularGrid(std::vector<std::int64_t> mesh) : mesh_(std::move(mesh)), n_(1), n_real_(1.0) {
    if (mesh_.empty()) throw std::invalid_argument("grid needs at least one coordinate");
    bool saturated = false;
    for (auto m : mesh_) {
        if (m < 1) throw std::invalid_argument("mesh sizes must be positive");
        n_real_ *= static_cast<double>(m);
        const auto um = static_cast<std::uint64_t>(m);
        if (saturated || n_ > std::numeric_limits<std::uint64_t>::max() / um) {
            saturated = true;
            n_ = std::numeric_limits<std::uint64_t>::max();
        } else {
            n_ *= um;
        }
    }
}

GridPoints::iterator::iterator(const RegularGrid* grid, bool end) : grid_(grid), done_(end) {
    if (end) return;
    k_.assign(grid->dimension(), 0);
    point_.assign(grid->dimension(), 0.0);
}

GridPoints::iterator& GridPoints::iterator::operator++() {
    const auto& mesh = grid_->mesh();
    for (std::size_t j = mesh.size(); j-- > 0;) {
        if (++k_[j] < mesh[j]) {
            point_[j] = static_cast<double>(k_[j]) / static_cast<double>(mesh[j]);
            return *this;
        }
        k_[j] = 0;
        point_[j] = 0.0;
    }
    done_ = true;
    return *this;
}

GridPoints points(const RegularGrid& grid, std::uint64_t cap) {
    if (grid.n() > cap) {
        throw CapExceeded("grid has " + std::to_string(grid.n()) + " points, cap is " + std::to_string(cap),
                          grid.n());
    }
    return GridPoints(grid);
}

bool in_dual(const RegularGrid& grid, const FrequencyIndex& h) {
    if (h.size() != grid.dimension()) throw std::invalid_argument("dimension mismatch in in_dual");
    for (std::size_t j = 0; j < h.size(); ++j)
        if (residue(h[j], grid.mesh()[j]) != 0) return false;
    return true;
}

std::vector<std::int64_t> coset_of(const RegularGrid& grid, const FrequencyIndex& h) {
    if (h.size() != grid.dimension()) throw std::invalid_argument("dimension mismatch in coset_of");
    std::vector<std::int64_t> r(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) r[j] = residue(h[j], grid.mesh()[j]);
    return r;
}

namespace {

// roots[j][t] = exp(2 pi i t / m_j)
std::vector<std::vector<Complex>> roots_of_unity(const RegularGrid& grid) {
    std::vector<std::vector<Complex>> roots;
    roots.reserve(grid.dimension());
    for (auto m : grid.mesh()) {
        std::vector<Complex> r(static_cast<std::size_t>(m));
        for (std::int64_t t = 0; t < m; ++t) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
            r[static_cast<std::size_t>(t)] = {std::cos(angle), std::sin(angle)};
        }
        roots.push_back(std::move(r));
    }
    return roots;
}

std::int64_t mul_mod(std::int64_t r, std::int64_t k, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(r) * k) % m);
}

// Odometer over integer grid coordinates, row-major.
bool advance(std::vector<std::int64_t>& k, const std::vector<std::int64_t>& mesh) {
    for (std::size_t j = mesh.size(); j-- > 0;) {
        if (++k[j] < mesh[j]) return true;
        k[j] = 0;
    }
    return false;
}

void check_grid_dimension(const RegularGrid& grid, const KorobovParams& params) {
    if (grid.dimension() != static_cast<std::size_t>(params.s()))
        throw std::invalid_argument("grid dimension differs from space dimension");
}

} // namespace

std::vector<Complex> sample(const RegularGrid& grid, const FourierPolynomial& f, std::uint64_t cap) {
    check_grid_dimension(grid, f.params());
    points(grid, cap); // cap check
    const auto roots = roots_of_unity(grid);
    const auto& mesh = grid.mesh();
    const std::size_t s = mesh.size();

    std::vector<std::vector<std::int64_t>> res;
    std::vector<Complex> coeff;
    for (const auto& [h, c] : f.coefficients()) {
        res.push_back(coset_of(grid, h));
        coeff.push_back(c);
    }

    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(grid.n()));
    std::vector<std::int64_t> k(s, 0);
    do {
        Complex sum{};
        for (std::size_t g = 0; g < coeff.size(); ++g) {
            Complex phase = coeff[g];
            for (std::size_t j = 0; j < s; ++j)
                phase *= roots[j][static_cast<std::size_t>(mul_mod(res[g][j], k[j], mesh[j]))];
            sum += phase;
        }
        values.push_back(sum);
    } while (advance(k, mesh));
    return values;
}

Complex aliased_coefficient(const RegularGrid& grid, const std::vector<Complex>& samples, const FrequencyIndex& h) {
    if (samples.size() != grid.n()) throw std::invalid_argument("sample count differs from grid size");
    const auto roots = roots_of_unity(grid);
    const auto& mesh = grid.mesh();
    const std::size_t s = mesh.size();
    // exp(-2 pi i h_j k_j / m_j) = roots[(-h_j k_j) mod m_j]
    std::vector<std::int64_t> neg(s);
    for (std::size_t j = 0; j < s; ++j) neg[j] = residue(-h[j], mesh[j]);

    Complex sum{};
    std::vector<std::int64_t> k(s, 0);
    std::size_t idx = 0;
    do {
        Complex phase = samples[idx++];
        for (std::size_t j = 0; j < s; ++j)
            phase *= roots[j][static_cast<std::size_t>(mul_mod(neg[j], k[j], mesh[j]))];
        sum += phase;
    } while (advance(k, mesh));
    return sum / grid.n_real();
}

Complex aliased_coefficient(const RegularGrid& grid, const FourierPolynomial& f, const FrequencyIndex& h,
                            std::uint64_t cap) {
    if (h.size() != grid.dimension()) throw std::invalid_argument("dimension mismatch in aliased_coefficient");
    return aliased_coefficient(grid, sample(grid, f, cap), h);
}

Complex dual_lattice_coefficient(const RegularGrid& grid, const FourierPolynomial& f, const FrequencyIndex& h) {
    const auto target = coset_of(grid, h);
    Complex sum{};
    for (const auto& [g, c] : f.coefficients())
        if (coset_of(grid, g) == target) sum += c;
    return sum;
}

Complex quadrature_residual(const RegularGrid& grid, const FourierPolynomial& f, std::uint64_t cap) {
    const auto values = sample(grid, f, cap);
    Complex mean{};
    for (const auto& v : values) mean += v;
    mean /= grid.n_real();
    return f.coefficient(FrequencyIndex::zero(f.params().s())) - mean;
}

Complex quadrature_residual_dual(const RegularGrid& grid, const FourierPolynomial& f) {
    Complex sum{};
    for (const auto& [g, c] : f.coefficients())
        if (!g.is_zero() && in_dual(grid, g)) sum += c;
    return -sum;
}

double f_n(const KorobovParams& params, const RegularGrid& grid) {
    check_grid_dimension(grid, params);
    const double L = params.log_inv_omega();
    double log_product = 0.0;
    for (std::size_t j = 0; j < grid.dimension(); ++j) {
        const double b = params.b()[j];
        // a_j 2^{-b_j} (m_j h)^{b_j} = [a_j (m_j / 2)^{b_j}] h^{b_j}
        const double c = params.a()[j] * std::pow(static_cast<double>(grid.mesh()[j]) / 2.0, b);
        const double first = std::exp(-c * L);
        const auto sum = detail::power_series(L, c, b, std::max(1e-300, 1e-17 * first));
        log_product += std::log1p(2.0 * sum.upper());
    }
    return std::expm1(log_product);
}

} // namespace korobov
