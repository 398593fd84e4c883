#include "commands.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

namespace {

void add_common(CLI::App* cmd, korobov::cli::RunOptions& opt) {
    cmd->add_option("--config", opt.config, "JSON configuration file")->required();
    cmd->add_option("--out", opt.out, "Output file (default: stdout)");
    cmd->add_option("--seed", opt.seed, "Seed for random test functions");
    cmd->add_option("--cap-n", opt.cap_n, "Largest grid size")->check(CLI::PositiveNumber);
    cmd->add_option("--cap-set", opt.cap_set, "Largest index set size")->check(CLI::PositiveNumber);
}

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("korobov");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* level = std::getenv("KOROBOV_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

} // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Approximation and integration in weighted Korobov spaces"};
    app.require_subcommand(1);
    korobov::cli::RunOptions opt;

    auto* analyze = app.add_subcommand("analyze", "Tractability report for the configured sequences");
    auto* complexity = app.add_subcommand("complexity", "Information complexity and its product bounds (CSV)");
    auto* convergence = app.add_subcommand("convergence", "Minimal errors against the grid algorithm (CSV)");
    auto* integrate = app.add_subcommand("integrate", "Grid rule integration errors (CSV)");
    for (auto* cmd : {analyze, complexity, convergence, integrate}) add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : korobov::cli::kExitInvalidConfig;
    }

    if (analyze->parsed()) return korobov::cli::cmd_analyze(opt, std::cout, std::cerr);
    if (complexity->parsed()) return korobov::cli::cmd_complexity(opt, std::cerr);
    if (convergence->parsed()) return korobov::cli::cmd_convergence(opt, std::cerr);
    return korobov::cli::cmd_integrate(opt, std::cerr);
}
