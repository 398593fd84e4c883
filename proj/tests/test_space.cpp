#include "korobov/space.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace korobov;
using SF = SequenceFamily;

namespace {
KorobovParams unit(int s) { return make_params(0.5, SF::constant(1), SF::constant(1), s); }

// Kernel by direct summation over a box large enough for 1e-15 accuracy.
double direct_kernel(const KorobovParams& p, const std::vector<double>& x, const std::vector<double>& y) {
    double sum = 0.0;
    oracle::for_each_in_box(p, 60.0, [&](const std::vector<std::int64_t>& h) {
        double t = 0.0;
        for (std::size_t j = 0; j < h.size(); ++j) t += static_cast<double>(h[j]) * (x[j] - y[j]);
        sum += std::exp(-oracle::direct_exponent(p, h) * p.log_inv_omega()) * std::cos(2.0 * std::numbers::pi * t);
    });
    return sum;
}

std::vector<double> random_point(std::mt19937_64& rng, int s) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(s));
    for (auto& v : x) v = u(rng);
    return x;
}
} // namespace

TEST_CASE("kernel diagonal for the unit weights is 3 per coordinate") {
    const std::vector<double> x = {0.3};
    const Complex k = kernel_eval(unit(1), x, x);
    CHECK(k.real() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(k.imag() == 0.0);
    const std::vector<double> x2 = {0.1, 0.7};
    CHECK(kernel_eval(unit(2), x2, x2).real() == doctest::Approx(9.0).epsilon(1e-14));
    CHECK_THROWS(kernel_eval(unit(1), x, x, 0.0));
}

TEST_CASE("kernel matches direct summation and is bounded by its diagonal") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const int s = 1 + trial % 2;
        const auto p = make_params(0.4, SF::constant(1.5), SF::constant(1 + trial % 3), s);
        const auto x = random_point(rng, s);
        const auto y = random_point(rng, s);
        const double k = kernel_eval(p, x, y).real();
        CHECK(std::abs(k - direct_kernel(p, x, y)) < 1e-13);
        CHECK(std::abs(k) <= kernel_eval(p, x, x).real() + 1e-14);
        CHECK(kernel_eval(p, x, x).real() >= 1.0);
        CHECK(std::abs(k - kernel_eval(p, y, x).real()) < 1e-14);
        auto shifted = x;
        shifted[0] += 1.0;
        CHECK(std::abs(k - kernel_eval(p, shifted, y).real()) < 1e-13);
    }
}

TEST_CASE("kernel Gram matrices are positive semidefinite") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const int s = 1 + trial % 3;
        const auto p = oracle::random_params(rng, s);
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(random_point(rng, s));
        Eigen::MatrixXd G(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k < 5; ++k) G(i, k) = kernel_eval(p, pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(k)]).real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
        CHECK(es.eigenvalues().minCoeff() >= -1e-9 * G.trace());
    }
}

TEST_CASE("evaluation") {
    const auto p = unit(2);
    FourierPolynomial one(p);
    one.set(FrequencyIndex{0, 0}, 1.0);
    CHECK(evaluate(one, std::vector<double>{0.37, 0.91}) == Complex(1.0, 0.0));

    const FrequencyIndex h{2, -1};
    const auto e = basis_function(p, h);
    CHECK(std::abs(evaluate(e, std::vector<double>{0.0, 0.0}) - std::sqrt(weight(p, h))) < 1e-15);

    std::mt19937_64 rng(23);
    const auto set = enumerate(p, 4.0, 1000);
    const auto f = random_unit_ball(p, set, 99);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_point(rng, 2);
        CHECK(std::abs(evaluate(f, x) - oracle::direct_evaluate(f, x)) < 1e-12);
    }
}

TEST_CASE("basis functions are orthonormal") {
    const auto p = make_params(0.3, SF::power(1, 1), SF::constant(2), 3);
    const std::vector<FrequencyIndex> hs = {{0, 0, 0}, {1, 0, 0}, {-2, 1, 0}, {0, 0, 3}, {5, -4, 2}};
    for (const auto& h : hs) {
        CHECK(std::abs(norm(basis_function(p, h)) - 1.0) < 1e-12);
        for (const auto& g : hs)
            if (!(g == h)) CHECK(std::abs(inner(basis_function(p, h), basis_function(p, g))) == 0.0);
    }
    FourierPolynomial f(p);
    const FrequencyIndex h{1, 1, 0};
    f.set(h, Complex(3.0, 4.0));
    CHECK(norm(f) == doctest::Approx(5.0 / std::sqrt(weight(p, h))).epsilon(1e-14));
    CHECK(std::abs(inner(f, f) - norm(f) * norm(f)) < 1e-12 * norm(f) * norm(f));
    CHECK_THROWS(inner(f, FourierPolynomial(unit(3))));
}

TEST_CASE("reproducing property on the support of f") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const int s = 1 + trial % 3;
        const auto p = oracle::random_params(rng, s);
        const auto set = enumerate(p, 5.0, 100000);
        const auto f = random_unit_ball(p, set, 1000 + static_cast<std::uint64_t>(trial));
        const auto x = random_point(rng, s);
        std::vector<FrequencyIndex> support;
        for (const auto& e : set.members) support.push_back(e.h);
        const auto kx = kernel_section(p, x, support);
        CHECK(std::abs(inner(f, kx) - evaluate(f, x)) < 1e-10);
    }
}

TEST_CASE("random unit-ball elements") {
    const auto p = unit(2);
    const auto set = enumerate(p, 5.0, 1000);
    const auto f = random_unit_ball(p, set, 5);
    const auto g = random_unit_ball(p, set, 5);
    CHECK(std::abs(norm(f) - 1.0) < 1e-12);
    CHECK(f.coefficients() == g.coefficients());
    CHECK_FALSE(random_unit_ball(p, set, 6).coefficients() == f.coefficients());

    const auto c = random_unit_ball(p, std::vector<FrequencyIndex>{FrequencyIndex{0, 0}}, 8);
    CHECK(std::abs(std::abs(c.coefficient(FrequencyIndex{0, 0})) - 1.0) < 1e-15);
    CHECK_THROWS(random_unit_ball(p, std::vector<FrequencyIndex>{}, 1));
}

TEST_CASE("L2 norm and differences follow Parseval") {
    const auto p = unit(1);
    FourierPolynomial f(p), g(p);
    f.set(FrequencyIndex{1}, Complex(1.0, 1.0));
    g.set(FrequencyIndex{1}, Complex(1.0, 0.0));
    g.set(FrequencyIndex{-3}, Complex(0.0, 2.0));
    const auto d = difference(f, g);
    CHECK(l2_norm(d) == doctest::Approx(std::sqrt(1.0 + 4.0)));
}
