#include "korobov/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace korobov {

using nlohmann::json;

namespace {

const json& member(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(path + "." + key, "missing");
    return *it;
}

double number(const json& j, const std::string& key, const std::string& path) {
    const json& v = member(j, key, path);
    if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path + "." + key, "expected a finite number");
    return x;
}

json extended(const ExtendedValue& v) {
    switch (v.status) {
    case Status::finite: return v.value;
    case Status::infinite: return "infinite";
    case Status::unknown: return "unknown";
    }
    return "unknown";
}

} // namespace

json to_json(const SequenceFamily& f) {
    using Kind = SequenceFamily::Kind;
    switch (f.kind()) {
    case Kind::constant: return {{"family", "constant"}, {"c", f.c()}};
    case Kind::power: return {{"family", "power"}, {"c", f.c()}, {"k", f.p()}};
    case Kind::geometric: return {{"family", "geometric"}, {"c", f.c()}, {"r", f.p()}};
    case Kind::exponential: return {{"family", "exponential"}, {"c", f.c()}, {"alpha", f.p()}};
    case Kind::superexponential:
        return {{"family", "superexponential"}, {"c", f.c()}, {"alpha", f.p()}, {"k", f.q()}};
    case Kind::explicit_list: {
        json out = {{"family", "explicit"}, {"values", f.values()}};
        switch (f.tail()) {
        case SequenceFamily::Tail::none: out["tail"] = "none"; break;
        case SequenceFamily::Tail::repeat_last: out["tail"] = "repeat_last"; break;
        case SequenceFamily::Tail::continuation: out["tail"] = to_json(*f.continuation()); break;
        }
        return out;
    }
    }
    throw std::logic_error("unhandled family kind");
}

SequenceFamily family_from_json(const json& j, const std::string& path) {
    const json& kind = member(j, "family", path);
    if (!kind.is_string()) throw ConfigError(path + ".family", "expected a string");
    const auto name = kind.get<std::string>();
    try {
        if (name == "constant") return SequenceFamily::constant(number(j, "c", path));
        if (name == "power") return SequenceFamily::power(number(j, "c", path), number(j, "k", path));
        if (name == "geometric") return SequenceFamily::geometric(number(j, "c", path), number(j, "r", path));
        if (name == "exponential")
            return SequenceFamily::exponential(number(j, "c", path), number(j, "alpha", path));
        if (name == "superexponential")
            return SequenceFamily::superexponential(number(j, "c", path), number(j, "alpha", path),
                                                    number(j, "k", path));
        if (name == "explicit") {
            const json& values = member(j, "values", path);
            if (!values.is_array() || values.empty())
                throw ConfigError(path + ".values", "expected a nonempty array of numbers");
            std::vector<double> v;
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (!values[i].is_number())
                    throw ConfigError(path + ".values[" + std::to_string(i) + "]", "expected a number");
                v.push_back(values[i].get<double>());
            }
            auto it = j.find("tail");
            if (it == j.end() || (it->is_string() && *it == "none"))
                return SequenceFamily::explicit_list(std::move(v));
            if (it->is_string() && *it == "repeat_last")
                return SequenceFamily::explicit_list(std::move(v), SequenceFamily::Tail::repeat_last);
            if (it->is_object()) return SequenceFamily::explicit_list(std::move(v), family_from_json(*it, path + ".tail"));
            throw ConfigError(path + ".tail", "expected \"none\", \"repeat_last\" or a family object");
        }
    } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const ConfigError*>(&e)) throw;
        throw ConfigError(path, e.what());
    }
    throw ConfigError(path + ".family", "unknown family \"" + name + "\"");
}

json to_json(const KorobovParams& params) {
    return {{"omega", params.omega()},
            {"s", params.s()},
            {"a", to_json(params.a_family())},
            {"b", to_json(params.b_family())}};
}

KorobovParams params_from_json(const json& j, const std::string& path) {
    const double omega = number(j, "omega", path);
    const json& sj = member(j, "s", path);
    if (!sj.is_number_integer()) throw ConfigError(path + ".s", "expected an integer");
    const auto s = sj.get<std::int64_t>();
    if (s < 1 || s > 1000000) throw ConfigError(path + ".s", "dimension must lie in [1, 10^6]");
    SequenceFamily a = family_from_json(member(j, "a", path), path + ".a");
    SequenceFamily b = family_from_json(member(j, "b", path), path + ".b");
    try {
        return make_params(omega, std::move(a), std::move(b), static_cast<int>(s));
    } catch (const ParamsError& e) {
        std::string where = path;
        switch (e.code()) {
        case ParamsErrorCode::omega_out_of_range: where += ".omega"; break;
        case ParamsErrorCode::dimension_invalid: where += ".s"; break;
        case ParamsErrorCode::a_below_one:
        case ParamsErrorCode::a_nonmonotone: where += ".a"; break;
        case ParamsErrorCode::b_below_one: where += ".b"; break;
        case ParamsErrorCode::index_invalid: break;
        }
        throw ConfigError(where, e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
}

json to_json(const TractabilityReport& r) {
    json out;
    out["s"] = r.s;
    out["B_s"] = r.B_s;
    switch (r.B.status) {
    case Status::finite: out["B"] = {r.B.bracket.lo, r.B.bracket.hi}; break;
    case Status::infinite: out["B"] = "infinite"; break;
    case Status::unknown: out["B"] = "unknown"; break;
    }
    out["a_limit"] = extended(r.a_limit);
    out["alpha_star"] = extended(r.alpha_star);
    out["exp_rate_ps"] = r.exp_rate_ps;
    out["uexp"] = to_string(r.uexp);
    out["uexp_rate"] = r.uexp_rate ? json{r.uexp_rate->lo, r.uexp_rate->hi} : json(nullptr);
    out["wt"] = to_string(r.wt);
    out["wt_uexp"] = to_string(r.wt_uexp);
    out["pt_spt"] = to_string(r.pt_spt);
    out["tau_star"] = r.tau_star ? json{r.tau_star->lo, r.tau_star->hi} : json(nullptr);
    out["wt_definition"] = r.wt_definition;
    return out;
}

json load_json_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw ConfigError(filename, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ConfigError(filename, std::string("parse error at byte ") + std::to_string(e.byte));
    }
}

} // namespace korobov
