#pragma once

#include "korobov/index_set.hpp"
#include "korobov/params.hpp"
#include "korobov/space.hpp"

#include <cstdint>
#include <iterator>
#include <vector>

namespace korobov {

inline constexpr std::uint64_t kDefaultGridCap = 1000000;

/// Regular grid {(k_1/m_1, ..., k_s/m_s) : 0 <= k_j < m_j} with n = prod m_j points.
class RegularGrid {
public:
    explicit RegularGrid(std::vector<std::int64_t> mesh);

    const std::vector<std::int64_t>& mesh() const noexcept { return mesh_; }
    std::size_t dimension() const noexcept { return mesh_.size(); }
    /// Point count; saturates at UINT64_MAX for meshes that are only ever
    /// used symbolically (dual lattice, bounds).
    std::uint64_t n() const noexcept { return n_; }
    /// n as a real number, exact up to 2^53 and finite beyond.
    double n_real() const noexcept { return n_real_; }

    bool operator==(const RegularGrid&) const = default;

private:
    std::vector<std::int64_t> mesh_;
    std::uint64_t n_;
    double n_real_;
};

/// Mathematical residue in [0, m).
inline std::int64_t residue(std::int64_t h, std::int64_t m) {
    const std::int64_t r = h % m;
    return r < 0 ? r + m : r;
}

/// Row-major stream of grid points (k_1 slowest ... k_s fastest).
class GridPoints {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Point;
        using difference_type = std::ptrdiff_t;
        using pointer = const Point*;
        using reference = const Point&;

        iterator() = default;
        iterator(const RegularGrid* grid, bool end);

        reference operator*() const { return point_; }
        pointer operator->() const { return &point_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || k_ == o.k_); }

        /// Integer coordinates k_j of the current point.
        const std::vector<std::int64_t>& k() const noexcept { return k_; }

    private:
        const RegularGrid* grid_ = nullptr;
        std::vector<std::int64_t> k_;
        Point point_;
        bool done_ = true;
    };

    explicit GridPoints(RegularGrid grid) : grid_(std::move(grid)) {}
    iterator begin() const { return iterator(&grid_, false); }
    iterator end() const { return iterator(&grid_, true); }

private:
    RegularGrid grid_;
};

/// Point stream; throws CapExceeded when n > cap.
GridPoints points(const RegularGrid& grid, std::uint64_t cap = kDefaultGridCap);

/// h_j divisible by m_j for every j.
bool in_dual(const RegularGrid& grid, const FrequencyIndex& h);

/// (h_1 mod m_1, ..., h_s mod m_s): the coset of h modulo the dual lattice.
std::vector<std::int64_t> coset_of(const RegularGrid& grid, const FrequencyIndex& h);

/// Samples f on the grid.  Phases use exact integer residues, so values are
/// returned in the row-major point order.
std::vector<Complex> sample(const RegularGrid& grid, const FourierPolynomial& f,
                            std::uint64_t cap = kDefaultGridCap);

/// (1/n) sum_k f(x_k) exp(-2 pi i h.x_k) computed from samples.
Complex aliased_coefficient(const RegularGrid& grid, const FourierPolynomial& f, const FrequencyIndex& h,
                            std::uint64_t cap = kDefaultGridCap);
/// Same quantity from the already sampled values of f.
Complex aliased_coefficient(const RegularGrid& grid, const std::vector<Complex>& samples, const FrequencyIndex& h);

/// sum_{l in dual} fhat(h + l): the aliasing identity's right-hand side.
Complex dual_lattice_coefficient(const RegularGrid& grid, const FourierPolynomial& f, const FrequencyIndex& h);

/// int f - (1/n) sum_k f(x_k), from samples.
Complex quadrature_residual(const RegularGrid& grid, const FourierPolynomial& f,
                            std::uint64_t cap = kDefaultGridCap);
/// -sum_{l in dual, l != 0} fhat(l)
Complex quadrature_residual_dual(const RegularGrid& grid, const FourierPolynomial& f);

/// F_n = sum_{l in dual, l != 0} omega^{sum_j 2^{-b_j} a_j |l_j|^{b_j}}, evaluated in
/// product form; the returned value includes the certified truncation tail.
double f_n(const KorobovParams& params, const RegularGrid& grid);

} // namespace korobov
