#include "korobov/config.hpp"
#include "korobov/params.hpp"

#include <doctest.h>

#include <cmath>

using namespace korobov;
using SF = SequenceFamily;

TEST_CASE("family terms follow their closed forms") {
    const auto p = make_params(0.5, SF::geometric(1, 3), SF::constant(1), 3);
    CHECK(a_term(p, 2) == 9.0);
    CHECK(a_term(make_params(0.5, SF::constant(1), SF::constant(1), 1), 10) == 1.0);
    CHECK(SF::exponential(1, 2).term(3) == doctest::Approx(std::exp(6.0)).epsilon(1e-15));
    CHECK(SF::power(2, 2).term(3) == 18.0);
    CHECK(SF::superexponential(1, 1, 2).term(2) == doctest::Approx(std::exp(4.0)).epsilon(1e-15));
}

TEST_CASE("explicit lists and their tails") {
    const auto repeat = SF::explicit_list({1, 2, 5}, SF::Tail::repeat_last);
    CHECK(repeat.term(3) == 5.0);
    CHECK(repeat.term(100) == 5.0);

    const auto cont = SF::explicit_list({1, 3}, SF::geometric(1, 3));
    CHECK(cont.term(2) == 3.0);
    CHECK(cont.term(3) == 27.0); // continuation evaluated at the absolute index

    const auto none = SF::explicit_list({1, 2});
    CHECK(none.term(2) == 2.0);
    CHECK_THROWS_AS(none.term(3), ParamsError);
}

TEST_CASE("term index is 1-based") {
    const auto p = make_params(0.5, SF::constant(1), SF::constant(1), 1);
    CHECK_THROWS_AS(a_term(p, 0), ParamsError);
    try {
        a_term(p, 0);
    } catch (const ParamsError& e) {
        CHECK(e.code() == ParamsErrorCode::index_invalid);
    }
}

namespace {
ParamsErrorCode code_of(double omega, SF a, SF b, int s) {
    try {
        make_params(omega, std::move(a), std::move(b), s);
    } catch (const ParamsError& e) {
        return e.code();
    }
    FAIL("expected a ParamsError");
    return ParamsErrorCode::index_invalid;
}
} // namespace

TEST_CASE("validation reports distinct error codes") {
    CHECK_NOTHROW(make_params(0.5, SF::constant(1), SF::constant(1), 3));
    CHECK(code_of(1.0, SF::constant(1), SF::constant(1), 1) == ParamsErrorCode::omega_out_of_range);
    CHECK(code_of(0.0, SF::constant(1), SF::constant(1), 1) == ParamsErrorCode::omega_out_of_range);
    CHECK(code_of(0.5, SF::explicit_list({2, 1}), SF::constant(1), 2) == ParamsErrorCode::a_nonmonotone);
    CHECK(code_of(0.5, SF::constant(0.5), SF::constant(1), 1) == ParamsErrorCode::a_below_one);
    CHECK(code_of(0.5, SF::constant(1), SF::constant(0.9), 1) == ParamsErrorCode::b_below_one);
    CHECK(code_of(0.5, SF::constant(1), SF::constant(1), 0) == ParamsErrorCode::dimension_invalid);

    try {
        make_params(1.0, SF::constant(1), SF::constant(1), 1);
    } catch (const ParamsError& e) {
        CHECK(std::string(e.what()).find("omega out of range") == 0);
    }
    try {
        make_params(0.5, SF::explicit_list({2, 1}), SF::constant(1), 2);
    } catch (const ParamsError& e) {
        CHECK(std::string(e.what()).find("a nonmonotone") == 0);
    }
}

TEST_CASE("validation only inspects the first s terms") {
    // Decreasing beyond s = 2 is not a violation for s = 2.
    CHECK_NOTHROW(make_params(0.5, SF::explicit_list({1, 2, 1.5}, SF::Tail::repeat_last), SF::constant(1), 2));
    CHECK_THROWS_AS(make_params(0.5, SF::explicit_list({1, 2, 1.5}, SF::Tail::repeat_last), SF::constant(1), 3),
                    ParamsError);
    // Terms past a tail-less list are undefined.
    CHECK_THROWS_AS(make_params(0.5, SF::explicit_list({1, 2}), SF::constant(1), 3), ParamsError);
}

TEST_CASE("validated params satisfy the term invariants") {
    const auto p = make_params(0.3, SF::power(1, 1.5), SF::geometric(1, 2), 6);
    for (int j = 1; j <= 6; ++j) {
        CHECK(a_term(p, j) >= 1.0);
        CHECK(b_term(p, j) >= 1.0);
        if (j < 6) CHECK(a_term(p, j) <= a_term(p, j + 1));
    }
    CHECK(p.B_s() == doctest::Approx(0.5 + 0.25 + 0.125 + 0.0625 + 0.03125 + 0.015625));
    CHECK(p.log_inv_omega() == doctest::Approx(-std::log(0.3)));
    CHECK(p.with_dimension(2).a().size() == 2);
}

TEST_CASE("family round trip through the config format preserves terms") {
    const std::vector<SF> families = {
        SF::constant(1.5),
        SF::power(1.25, 2.5),
        SF::geometric(1.1, 1.0001),
        SF::exponential(1, 0.003),
        SF::superexponential(1, 0.0001, 1.5),
        SF::explicit_list({1, 1.5, 2.25}, SF::Tail::repeat_last),
        SF::explicit_list({1, 3, 9}, SF::geometric(1, 3)),
        SF::explicit_list({1, 2}, SF::explicit_list({1, 2, 7}, SF::power(1, 1))),
    };
    for (const auto& f : families) {
        const auto text = to_json(f).dump();
        const SF back = family_from_json(nlohmann::json::parse(text));
        CHECK(back == f);
        for (std::int64_t j = 1; j <= 10000; ++j) {
            if (back.term(j) != f.term(j)) {
                FAIL_CHECK("term mismatch at j = " << j << " for " << text);
                break;
            }
        }
    }
}
