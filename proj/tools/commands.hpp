#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace korobov::cli {

struct RunOptions {
    std::string config;
    std::string out; // empty: stdout
    std::uint64_t seed = 1;
    std::uint64_t cap_n = 1000000;
    std::uint64_t cap_set = 1000000;
    std::size_t cap_coset = 2000;
};

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitUnknownVerdict = 2;
inline constexpr int kExitFailure = 3;

int cmd_analyze(const RunOptions& opt, std::ostream& table, std::ostream& err);
int cmd_complexity(const RunOptions& opt, std::ostream& err);
int cmd_convergence(const RunOptions& opt, std::ostream& err);
int cmd_integrate(const RunOptions& opt, std::ostream& err);

/// Formats a double with 17 significant digits.
std::string format_real(double x);

} // namespace korobov::cli
