#pragma once

#include "korobov/asymptotics.hpp"
#include "korobov/params.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace korobov {

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct TractabilityReport {
    int s = 0;
    double B_s = 0.0;          // sum_{j <= s} 1/b_j
    SeriesValue B;             // sum_j 1/b_j
    ExtendedValue a_limit;     // lim a_j
    ExtendedValue alpha_star;  // liminf (log a_j)/j
    double exp_rate_ps = 0.0;  // p*(s) = 1/B(s)
    Verdict uexp = Verdict::unknown;
    std::optional<Interval> uexp_rate; // p* = 1/B
    Verdict wt = Verdict::unknown;
    Verdict wt_uexp = Verdict::unknown;
    Verdict pt_spt = Verdict::unknown;
    std::optional<Interval> tau_star; // [max(B, log 3/alpha*), B + log 3/alpha*]
    std::string wt_definition;

    bool has_unknown() const noexcept;
};

/// Decides the EXP/UEXP/WT/PT/SPT picture from the closed forms of a and b.
/// Throws ParamsError when the first s terms violate the parameter invariants.
TractabilityReport analyze(const SequenceFamily& a, const SequenceFamily& b, int s);

struct RateFit {
    double p;          // slope of log log(1/e) against log n
    double intercept;
    double residual;   // root mean square residual
};

/// Least-squares fit of e(n) ~ C q^{(n/C1)^p} from (n, e) pairs.
RateFit fit_exponential_rate(const std::vector<std::pair<double, double>>& errors);

/// Same fit from (n, log(1/e)) pairs, for errors below double range.
RateFit fit_exponential_rate_log(const std::vector<std::pair<double, double>>& log_inv_errors);

} // namespace korobov
