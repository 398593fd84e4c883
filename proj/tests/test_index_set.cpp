#include "korobov/index_set.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace korobov;
using SF = SequenceFamily;

namespace {
KorobovParams unit(int s) { return make_params(0.5, SF::constant(1), SF::constant(1), s); }

KorobovParams listed(std::vector<double> a, std::vector<double> b) {
    const int s = static_cast<int>(a.size());
    return make_params(0.5, SF::explicit_list(std::move(a), SF::Tail::repeat_last),
                       SF::explicit_list(std::move(b), SF::Tail::repeat_last), s);
}
} // namespace

TEST_CASE("exponent is the weighted sum of powers") {
    CHECK(exponent(unit(2), FrequencyIndex{2, -1}) == 3.0);
    CHECK(exponent(listed({1, 2, 3}, {1.5, 2, 3}), FrequencyIndex::zero(3)) == 0.0);
    CHECK(exponent(listed({1}, {2}), FrequencyIndex{3}) == 9.0);
    CHECK_THROWS_AS(exponent(unit(2), FrequencyIndex{1}), std::invalid_argument);
}

TEST_CASE("x_of_eps") {
    CHECK(x_of_eps(std::exp(-1.0), std::exp(-1.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x_of_eps(0.25, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x_of_eps(0.5, 0.1) == doctest::Approx(2.0 * std::log(10.0) / std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS(x_of_eps(0.5, 1.0));
    CHECK_THROWS(x_of_eps(1.0, 0.5));
}

TEST_CASE("count examples") {
    CHECK(count(unit(1), 3.5) == 7);
    CHECK(count(unit(2), 2.1) == 13);
    CHECK(oracle::brute_count(unit(2), 2.1) == 13);
    CHECK(count(listed({1.5, 2}, {1, 3}), 0.75) == 1);
    CHECK(count(unit(3), 0.0) == 0);
    CHECK(count(unit(3), -1.0) == 0);
    CHECK(count(unit(1), 1.0) == 1); // strict: |h| = 1 has exponent 1, not < 1
}

TEST_CASE("count agrees with brute force over random instances") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(0.0, 30.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int s = 1 + trial % 4;
        const auto p = oracle::random_params(rng, s, 3.0, 2.5, trial % 2 == 0);
        double x = ux(rng);
        while (oracle::box_volume(p, x) > 2e5) x *= 0.7;
        CHECK(count(p, x) == oracle::brute_count(p, x));
    }
}

TEST_CASE("enumerate lists members in exponent then lexicographic order") {
    const auto one = enumerate(unit(1), 2.0, 100);
    REQUIRE(one.count() == 3);
    CHECK(one.members[0].h == FrequencyIndex{0});
    CHECK(one.members[1].h == FrequencyIndex{-1});
    CHECK(one.members[2].h == FrequencyIndex{1});

    CHECK(enumerate(unit(2), 0.0, 100).count() == 0);

    // a = (1,2), b = (1,1), x = 2.5: (+-1,+-1) has exponent 3 and is excluded.
    const auto two = enumerate(listed({1, 2}, {1, 1}), 2.5, 100);
    const std::vector<FrequencyIndex> expected = {{0, 0}, {-1, 0}, {1, 0}, {-2, 0}, {0, -1}, {0, 1}, {2, 0}};
    REQUIRE(two.count() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(two.members[i].h == expected[i]);

    const auto brute = oracle::brute_members(listed({1, 2}, {1, 1}), 2.5);
    CHECK(brute.size() == expected.size());
}

TEST_CASE("enumerate matches brute force as a set and is closed under sign flips") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int s = 1 + trial % 3;
        const auto p = oracle::random_params(rng, s);
        const double x = 6.0 + trial;
        const auto set = enumerate(p, x, 1000000);
        CHECK(set.count() == count(p, x));
        std::set<std::vector<std::int64_t>> got;
        for (const auto& e : set.members) {
            got.insert(e.h.components());
            CHECK(e.exponent < x);
        }
        const auto want = oracle::brute_members(p, x);
        CHECK(got == std::set<std::vector<std::int64_t>>(want.begin(), want.end()));
        for (const auto& h : got) {
            for (std::size_t j = 0; j < h.size(); ++j) {
                auto flipped = h;
                flipped[j] = -flipped[j];
                CHECK(got.count(flipped) == 1);
            }
        }
        for (std::size_t i = 1; i < set.members.size(); ++i) {
            const auto& l = set.members[i - 1];
            const auto& r = set.members[i];
            CHECK((l.exponent < r.exponent || (l.exponent == r.exponent && l.h < r.h)));
        }
    }
}

TEST_CASE("enumerate refuses sets beyond the cap and reports the count") {
    try {
        enumerate(unit(2), 10.0, 50);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        REQUIRE(e.true_count().has_value());
        CHECK(*e.true_count() == count(unit(2), 10.0));
    }
    CHECK_FALSE(count_capped(weights_of(unit(2)), 10.0, 50).has_value());
    CHECK(count_capped(weights_of(unit(2)), 10.0, 1000).value() == count(unit(2), 10.0));
}

TEST_CASE("count is monotone and ignores coordinates with a_j >= x") {
    const auto p = listed({1, 1.5, 7}, {1, 2, 1});
    for (double x = 0.25; x < 7.0; x += 0.25) {
        CHECK(count(p, x) <= count(p, x + 0.25));
        CHECK(count(p, x) == count(p.with_dimension(2), x));
    }
}

TEST_CASE("j(x)") {
    const auto geo = make_params(0.5, SF::geometric(1, 2), SF::constant(1), 3);
    auto j = j_of_x(geo, 5.0);
    CHECK_FALSE(j.infinite);
    CHECK(j.value == 2);

    const auto flat = make_params(0.5, SF::constant(1), SF::constant(1), 3);
    j = j_of_x(flat, 2.0);
    CHECK(j.infinite);
    CHECK(j.capped(3) == 3);

    const auto cont = make_params(0.5, SF::explicit_list({1, 3, 9}, SF::geometric(1, 3)), SF::constant(1), 3);
    j = j_of_x(cont, 3.0);
    CHECK_FALSE(j.infinite);
    CHECK(j.value == 1);

    CHECK_THROWS(j_of_x(geo, 2.0));
    const auto bare = make_params(0.5, SF::explicit_list({1, 3}), SF::constant(1), 2);
    CHECK_THROWS(j_of_x(bare, 5.0));
}

TEST_CASE("product bounds") {
    auto b = lemma1_bounds(unit(1), 3.5);
    CHECK(b.lower == 7.0);
    CHECK(b.upper == 7.0);
    b = lemma1_bounds(unit(2), 2.1);
    CHECK(b.lower == 9.0);
    CHECK(b.upper == 25.0);
    CHECK_THROWS(lemma1_bounds(unit(2), 1.0));
    CHECK_THROWS(lemma1_bounds(unit(2), 3.0, std::vector<double>{0.5, 1.5}));
}

TEST_CASE("default split gives the x/(a_j s) lower product") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(1.0, 40.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int s = 1 + trial % 4;
        const auto p = oracle::random_params(rng, s);
        const double x = std::max(ux(rng), p.a()[0] + 0.01);
        double want = 1.0;
        for (int jj = 0; jj < s; ++jj) {
            const auto u = static_cast<std::size_t>(jj);
            if (!(p.a()[u] < x)) break;
            want *= 2.0 * std::ceil(std::pow(x / (p.a()[u] * s), 1.0 / p.b()[u])) - 1.0;
        }
        CHECK(lemma1_bounds(p, x).lower == want);
    }
}

TEST_CASE("count_upper_pt") {
    const auto p = make_params(0.5, SF::exponential(1, 1), SF::constant(2), 2);
    const double bound = count_upper_pt(p, 4.0, 1.0, 1);
    CHECK(bound == doctest::Approx(3.0 * std::pow(4.0, 1.0 + std::log(3.0))).epsilon(1e-14));
    CHECK(static_cast<double>(count(p, 4.0)) <= bound);

    const auto p1 = make_params(0.5, SF::exponential(1, 1), SF::constant(1), 1);
    CHECK(count_upper_pt(p1, std::exp(1.0) + 1e-9, 1.0, 1) >= 1.0);

    try {
        count_upper_pt(make_params(0.5, SF::constant(1), SF::constant(1), 2), 4.0, 1.0, 1);
        FAIL("expected a violation");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("j = 1") != std::string::npos);
    }
}

TEST_CASE("count_upper_pt dominates the count on random instances") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(0.2, 1.0), ux(1.0, 30.0);
    for (int trial = 0; trial < 40; ++trial) {
        const double delta = ud(rng);
        const int s = 1 + trial % 4;
        const auto p = make_params(0.6, SF::exponential(1, delta), SF::power(1, 1 + trial % 3), s);
        const double x = std::max(ux(rng), p.a()[0] + 1e-6);
        CHECK(static_cast<double>(count(p, x)) <= count_upper_pt(p, x, delta, 1));
    }
}
