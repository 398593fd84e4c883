#include "commands.hpp"

#include "korobov/approx_std.hpp"
#include "korobov/config.hpp"
#include "korobov/grid.hpp"
#include "korobov/index_set.hpp"
#include "korobov/integrate.hpp"
#include "korobov/spectra.hpp"
#include "korobov/tractability.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace korobov::cli {

using nlohmann::json;

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::vector<double> real_list(const json& cfg, const std::string& key, std::vector<double> fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    if (!it->is_array() || it->empty()) throw ConfigError("$." + key, "expected a nonempty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        if (!(*it)[i].is_number()) throw ConfigError("$." + key + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back((*it)[i].get<double>());
    }
    return out;
}

std::vector<double> eps_list(const json& cfg, std::vector<double> fallback) {
    auto eps = real_list(cfg, "eps", std::move(fallback));
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (!(eps[i] > 0.0 && eps[i] < 1.0))
            throw ConfigError("$.eps[" + std::to_string(i) + "]", "eps must lie in (0,1)");
    return eps;
}

double real_option(const json& cfg, const std::string& key, double fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    if (!it->is_number()) throw ConfigError("$." + key, "expected a number");
    return it->get<double>();
}

std::vector<std::vector<std::int64_t>> mesh_list(const json& cfg, int s) {
    std::vector<std::vector<std::int64_t>> out;
    auto it = cfg.find("meshes");
    if (it == cfg.end()) {
        for (std::int64_t m = 1; m <= 6; ++m) out.emplace_back(static_cast<std::size_t>(s), m);
        return out;
    }
    if (!it->is_array()) throw ConfigError("$.meshes", "expected an array of mesh vectors");
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto path = "$.meshes[" + std::to_string(i) + "]";
        const json& row = (*it)[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(s))
            throw ConfigError(path, "expected " + std::to_string(s) + " mesh sizes");
        std::vector<std::int64_t> mesh;
        for (const auto& m : row) {
            if (!m.is_number_integer() || m.get<std::int64_t>() < 1)
                throw ConfigError(path, "mesh sizes must be positive integers");
            mesh.push_back(m.get<std::int64_t>());
        }
        out.push_back(std::move(mesh));
    }
    return out;
}

// Runs `body` against the --out file or stdout; maps errors to exit codes.
int run(const RunOptions& opt, std::ostream& err, const std::function<int(const json&, std::ostream&)>& body) {
    try {
        const json cfg = load_json_file(opt.config);
        if (opt.out.empty()) return body(cfg, std::cout);
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw ConfigError(opt.out, "cannot open output file");
        return body(cfg, file);
    } catch (const ConfigError& e) {
        err << "invalid config: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

std::string describe(const ExtendedValue& v) {
    switch (v.status) {
    case Status::finite: return format_real(v.value);
    case Status::infinite: return "infinite";
    case Status::unknown: return "unknown";
    }
    return "unknown";
}

std::string describe(const std::optional<Interval>& v) {
    if (!v) return "-";
    return "[" + format_real(v->lo) + ", " + format_real(v->hi) + "]";
}

std::string mesh_label(const RegularGrid& grid) {
    std::string out;
    for (std::size_t j = 0; j < grid.dimension(); ++j) {
        if (j) out += 'x';
        out += std::to_string(grid.mesh()[j]);
    }
    return out;
}

std::string yes_no(Verdict v) { return to_string(v); }

} // namespace

int cmd_analyze(const RunOptions& opt, std::ostream& table, std::ostream& err) {
    return run(opt, err, [&](const json& cfg, std::ostream& out) {
        const KorobovParams params = params_from_json(cfg);
        const TractabilityReport r = analyze(params.a_family(), params.b_family(), params.s());
        std::ostream& t = opt.out.empty() ? out : table;
        std::string B = r.B.status == Status::finite   ? describe(std::optional<Interval>(r.B.bracket))
                        : r.B.status == Status::infinite ? "infinite"
                                                         : "unknown";
        const std::vector<std::pair<std::string, std::string>> rows = {
            {"s", std::to_string(r.s)},
            {"B(s)", format_real(r.B_s)},
            {"B", B},
            {"lim a_j", describe(r.a_limit)},
            {"alpha*", describe(r.alpha_star)},
            {"p*(s)", format_real(r.exp_rate_ps)},
            {"UEXP", yes_no(r.uexp)},
            {"p*", describe(r.uexp_rate)},
            {"WT", yes_no(r.wt)},
            {"WT+UEXP", yes_no(r.wt_uexp)},
            {"PT/SPT", yes_no(r.pt_spt)},
            {"tau*", describe(r.tau_star)},
            {"WT definition", r.wt_definition},
        };
        for (const auto& [k, v] : rows) t << std::left << std::setw(16) << k << v << '\n';
        if (!opt.out.empty()) out << to_json(r).dump(2) << '\n';
        return r.has_unknown() ? kExitUnknownVerdict : kExitOk;
    });
}

int cmd_complexity(const RunOptions& opt, std::ostream& err) {
    return run(opt, err, [&](const json& cfg, std::ostream& out) {
        const KorobovParams base = params_from_json(cfg);
        const auto eps = eps_list(cfg, {1e-1, 1e-2, 1e-3, 1e-4});
        const auto s_values = real_list(cfg, "s_list", {static_cast<double>(base.s())});
        out << "s,eps,n_all,lemma_lower,lemma_upper\n";
        for (std::size_t i = 0; i < s_values.size(); ++i) {
            const double sd = s_values[i];
            if (!(sd >= 1.0 && sd == std::floor(sd) && sd <= 1e6))
                throw ConfigError("$.s_list[" + std::to_string(i) + "]", "expected a positive integer");
            KorobovParams params = base;
            try {
                params = base.with_dimension(static_cast<int>(sd));
            } catch (const ParamsError& e) {
                throw ConfigError("$.s_list[" + std::to_string(i) + "]", e.what());
            }
            for (double e : eps) {
                const double x = x_of_eps(params.omega(), e);
                const auto n = count_capped(weights_of(params), x, opt.cap_set);
                // Without x > a_1 only h = 0 qualifies and both bounds are 1.
                const CountBounds bounds = x > params.a()[0] ? lemma1_bounds(params, x) : CountBounds{1.0, 1.0};
                out << static_cast<int>(sd) << ',' << format_real(e) << ','
                    << (n ? std::to_string(*n) : std::string("cap_exceeded")) << ',' << format_real(bounds.lower)
                    << ',' << format_real(bounds.upper) << '\n';
            }
        }
        return kExitOk;
    });
}

int cmd_convergence(const RunOptions& opt, std::ostream& err) {
    return run(opt, err, [&](const json& cfg, std::ostream& out) {
        const KorobovParams params = params_from_json(cfg);
        const auto eps = eps_list(cfg, {1e-1, 1e-2, 1e-3});
        const auto range = real_list(cfg, "fit_range", {50.0, 5000.0});
        if (range.size() != 2 || !(range[0] >= 1.0 && range[1] > range[0]))
            throw ConfigError("$.fit_range", "expected [n_lo, n_hi] with 1 <= n_lo < n_hi");
        const double fit_points = real_option(cfg, "fit_points", 40.0);
        if (!(fit_points >= 8.0)) throw ConfigError("$.fit_points", "need at least 8 points");

        out << "eps,n,e_all,e_std_bound,e_std_exact,e_std_slack\n";
        std::vector<std::pair<double, double>> std_points;
        for (double e : eps) {
            spdlog::info("convergence: eps = {}", e);
            out << format_real(e) << ',';
            PropositionMesh mesh{RegularGrid({1}), 0.0, 0.0, 0.0, false};
            try {
                mesh = mesh_proposition(params, e, opt.cap_n);
            } catch (const CapExceeded& ex) {
                out << (ex.true_count() ? std::to_string(*ex.true_count()) : std::string("?"))
                    << ",,cap_exceeded,cap_exceeded,cap_exceeded\n";
                continue;
            }
            const std::uint64_t n = mesh.grid.n();
            out << n << ',' << format_real(nth_minimal_error_all(params, n)) << ',';
            try {
                const StdAlgorithm alg = make_std_algorithm(params, mesh.M, mesh.grid, opt.cap_set);
                out << format_real(error_upper_bound(alg)) << ',';
                const OracleResult oracle = exact_worst_case_error(alg, default_trunc_x(alg), opt.cap_coset);
                out << format_real(oracle.value) << ',' << format_real(oracle.slack) << '\n';
                std_points.emplace_back(static_cast<double>(n), -std::log(oracle.value));
            } catch (const CapExceeded&) {
                out << "overflow,overflow\n";
            }
        }

        // Sweep of the minimal error over log-spaced n.
        std::vector<std::pair<double, double>> all_points;
        const int k = static_cast<int>(fit_points);
        std::set<std::uint64_t> ns;
        for (int i = 0; i < k; ++i) {
            const double t = static_cast<double>(i) / (k - 1);
            ns.insert(static_cast<std::uint64_t>(std::llround(range[0] * std::pow(range[1] / range[0], t))));
        }
        for (auto n : ns) {
            const double le = nth_minimal_log_inv_error_all(params, n);
            if (all_points.empty() || le > all_points.back().second)
                all_points.emplace_back(static_cast<double>(n), le);
        }
        const double target = 1.0 / params.B_s();
        auto footer = [&](const char* name, const std::vector<std::pair<double, double>>& pts) {
            if (pts.size() < 8) {
                out << "#fit," << name << ",n/a," << format_real(target) << ",n/a\n";
                return;
            }
            const RateFit fit = fit_exponential_rate_log(pts);
            out << "#fit," << name << ',' << format_real(fit.p) << ',' << format_real(target) << ','
                << format_real(fit.residual) << '\n';
        };
        out << "#fit,quantity,p,target,residual\n";
        footer("e_all", all_points);
        std::sort(std_points.begin(), std_points.end());
        std::vector<std::pair<double, double>> monotone;
        for (const auto& p : std_points)
            if (monotone.empty() || (p.first > monotone.back().first && p.second > monotone.back().second))
                monotone.push_back(p);
        footer("e_std_exact", monotone);
        return kExitOk;
    });
}

int cmd_integrate(const RunOptions& opt, std::ostream& err) {
    return run(opt, err, [&](const json& cfg, std::ostream& out) {
        const KorobovParams params = params_from_json(cfg);
        const double M = real_option(cfg, "M", 16.0);
        if (!(M > 1.0)) throw ConfigError("$.M", "M must exceed 1");
        std::vector<std::pair<RegularGrid, double>> grids;
        for (auto& mesh : mesh_list(cfg, params.s())) grids.emplace_back(RegularGrid(std::move(mesh)), M);
        if (cfg.contains("eps")) {
            for (double e : eps_list(cfg, {})) {
                const PropositionMesh pm = mesh_proposition(params, e, opt.cap_n);
                grids.emplace_back(pm.grid, pm.M);
            }
        }

        out << "mesh,n,M,lower_bound,int_error,int_slack,app_error,app_slack,sample_int_error\n";
        std::uint64_t row = 0;
        for (const auto& [grid, rowM] : grids) {
            spdlog::info("integrate: mesh {}", mesh_label(grid));
            const StdAlgorithm alg = make_std_algorithm(params, rowM, grid, opt.cap_set);
            const double trunc = default_trunc_x(alg);
            const GridRule rule = induced_int_rule(alg);
            // Dual-lattice sums are cheap, so widen the truncation until the tail is negligible.
            IntErrorResult ie = worst_case_int_error(params, rule, trunc, opt.cap_set);
            for (double t = 2.0 * trunc; ie.slack > 1e-12 + 1e-6 * ie.value && t < 64.0 * trunc; t *= 2.0) {
                try {
                    ie = worst_case_int_error(params, rule, t, opt.cap_set);
                } catch (const CapExceeded&) {
                    break;
                }
            }
            const auto lower = int_lower_bound(params, grid.n());
            out << mesh_label(grid) << ',' << grid.n() << ',' << format_real(rowM) << ','
                << (lower ? format_real(*lower) : std::string("n/a")) << ',' << format_real(ie.value) << ','
                << format_real(ie.slack) << ',';
            try {
                const OracleResult oracle = exact_worst_case_error(alg, trunc, opt.cap_coset);
                out << format_real(oracle.value) << ',' << format_real(oracle.slack) << ',';
            } catch (const CapExceeded&) {
                out << "overflow,overflow,";
            }
            // Seeded random integrand supported on A(s,M) and the truncated dual lattice.
            std::vector<FrequencyIndex> support;
            std::set<FrequencyIndex> in_A;
            for (const auto& e : alg.index_set.members) {
                support.push_back(e.h);
                in_A.insert(e.h);
            }
            const FourierPolynomial extremal = extremal_integrand(params, grid, trunc, opt.cap_set);
            for (const auto& [h, c] : extremal.coefficients())
                if (!in_A.contains(h)) support.push_back(h);
            const FourierPolynomial f = random_unit_ball(params, support, opt.seed + row);
            const Complex exact = f.coefficient(FrequencyIndex::zero(params.s()));
            const double sample_err = grid.n() <= opt.cap_n ? std::abs(exact - integrate(rule, f, opt.cap_n))
                                                            : std::abs(quadrature_residual_dual(grid, f));
            out << format_real(sample_err) << '\n';
            ++row;
        }
        return kExitOk;
    });
}

} // namespace korobov::cli
