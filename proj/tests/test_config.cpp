#include "korobov/config.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace korobov;
using nlohmann::json;

namespace {
std::string error_path(const json& j) {
    try {
        params_from_json(j);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "<no error>";
}
} // namespace

TEST_CASE("params parse from the documented schema") {
    const auto j = json::parse(R"({"omega": 0.5, "s": 4,
        "a": {"family":"geometric","c":1,"r":3}, "b": {"family":"power","c":1,"k":2}})");
    const KorobovParams p = params_from_json(j);
    CHECK(p.s() == 4);
    CHECK(p.a()[1] == 9.0);
    CHECK(p.b()[2] == 9.0);
    CHECK(params_from_json(to_json(p)) == p);
}

TEST_CASE("parse errors carry path and reason") {
    CHECK(error_path(json::parse(R"({"s": 1, "a": {"family":"constant","c":1}, "b": {"family":"constant","c":1}})")) ==
          "$.omega");
    CHECK(error_path(json::parse(R"({"omega": 2, "s": 1, "a": {"family":"constant","c":1},
                                     "b": {"family":"constant","c":1}})")) == "$.omega");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 1, "a": {"family":"wavy","c":1},
                                     "b": {"family":"constant","c":1}})")) == "$.a.family");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 1, "a": {"family":"power","c":1},
                                     "b": {"family":"constant","c":1}})")) == "$.a.k");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 2, "a": {"family":"explicit","values":[2,1]},
                                     "b": {"family":"constant","c":1}})")) == "$.a");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 1.5, "a": {"family":"constant","c":1},
                                     "b": {"family":"constant","c":1}})")) == "$.s");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 1, "a": {"family":"constant","c":1},
                                     "b": {"family":"explicit","values":[1, "x"]}})")) == "$.b.values[1]");
    CHECK(error_path(json::parse(R"({"omega": 0.5, "s": 1, "a": {"family":"constant","c":1},
                                     "b": {"family":"explicit","values":[1], "tail": 3}})")) == "$.b.tail");

    try {
        params_from_json(json::parse(R"({"omega": 0.5, "s": 2, "a": {"family":"explicit","values":[2,1]},
                                          "b": {"family":"constant","c":1}})"));
    } catch (const ConfigError& e) {
        CHECK(e.reason().find("a nonmonotone") == 0);
    }
}

TEST_CASE("report serialization uses explicit infinite and unknown markers") {
    const auto r = analyze(SequenceFamily::constant(1), SequenceFamily::constant(1), 2);
    const json j = to_json(r);
    CHECK(j["B"] == "infinite");
    CHECK(j["uexp"] == "no");
    CHECK(j["wt"] == "no");
    CHECK(j["tau_star"].is_null());

    const auto u = analyze(SequenceFamily::explicit_list({1, 2}), SequenceFamily::constant(1), 2);
    CHECK(to_json(u)["a_limit"] == "unknown");
}

TEST_CASE("files with syntax errors are rejected with a ConfigError") {
    const std::string name = "korobov_test_bad.json";
    {
        std::ofstream out(name);
        out << "{\"omega\": 0.5,";
    }
    CHECK_THROWS_AS(load_json_file(name), ConfigError);
    std::remove(name.c_str());
    CHECK_THROWS_AS(load_json_file("/nonexistent/korobov.json"), ConfigError);
}
