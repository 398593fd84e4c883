#include "korobov/tractability.hpp"

#include <cmath>
#include <stdexcept>

namespace korobov {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

bool TractabilityReport::has_unknown() const noexcept {
    return uexp == Verdict::unknown || wt == Verdict::unknown || pt_spt == Verdict::unknown;
}

namespace {

Verdict both(Verdict x, Verdict y) {
    if (x == Verdict::no || y == Verdict::no) return Verdict::no;
    if (x == Verdict::yes && y == Verdict::yes) return Verdict::yes;
    return Verdict::unknown;
}

} // namespace

TractabilityReport analyze(const SequenceFamily& a, const SequenceFamily& b, int s) {
    const KorobovParams params = make_params(0.5, a, b, s); // omega plays no role here
    TractabilityReport r;
    r.s = s;
    r.B_s = params.B_s();
    r.exp_rate_ps = 1.0 / r.B_s;
    r.B = reciprocal_tail_sum(b, 1);
    r.a_limit = limit(a);
    r.alpha_star = liminf_log_over_index(a);
    r.wt_definition = "lim log n(eps,s) / (s + log eps^-1) = 0";

    switch (r.B.status) {
    case Status::finite:
        r.uexp = Verdict::yes;
        r.uexp_rate = Interval{1.0 / r.B.bracket.hi, 1.0 / r.B.bracket.lo};
        break;
    case Status::infinite: r.uexp = Verdict::no; break;
    case Status::unknown: r.uexp = Verdict::unknown; break;
    }

    switch (r.a_limit.status) {
    case Status::infinite: r.wt = Verdict::yes; break;
    case Status::finite: r.wt = Verdict::no; break;
    case Status::unknown: r.wt = Verdict::unknown; break;
    }
    r.wt_uexp = both(r.wt, r.uexp);

    Verdict alpha_positive = Verdict::unknown;
    if (r.alpha_star.is_infinite()) alpha_positive = Verdict::yes;
    else if (r.alpha_star.is_finite()) alpha_positive = r.alpha_star.value > 0.0 ? Verdict::yes : Verdict::no;
    r.pt_spt = both(r.uexp, alpha_positive);

    if (r.pt_spt == Verdict::yes) {
        if (r.alpha_star.is_infinite()) {
            r.tau_star = r.B.bracket;
        } else {
            const double l = std::log(3.0) / r.alpha_star.value;
            r.tau_star = Interval{std::max(r.B.bracket.lo, l), r.B.bracket.hi + l};
        }
    }
    return r;
}

RateFit fit_exponential_rate_log(const std::vector<std::pair<double, double>>& log_inv_errors) {
    if (log_inv_errors.size() < 8) throw std::invalid_argument("rate fit needs at least 8 points");
    for (std::size_t i = 0; i < log_inv_errors.size(); ++i) {
        const auto [n, le] = log_inv_errors[i];
        if (!(n > 0.0)) throw std::invalid_argument("rate fit needs positive n");
        if (!(le > 0.0)) throw std::invalid_argument("rate fit needs errors below 1");
        if (i > 0 && !(n > log_inv_errors[i - 1].first))
            throw std::invalid_argument("rate fit needs increasing n");
        if (i > 0 && !(le > log_inv_errors[i - 1].second))
            throw std::invalid_argument("rate fit needs strictly decreasing errors");
    }
    const auto k = static_cast<double>(log_inv_errors.size());
    double sx = 0, sy = 0;
    for (const auto& [n, le] : log_inv_errors) {
        sx += std::log(n);
        sy += std::log(le);
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, sxy = 0;
    for (const auto& [n, le] : log_inv_errors) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(le) - my);
    }
    RateFit fit;
    fit.p = sxy / sxx;
    fit.intercept = my - fit.p * mx;
    double ss = 0;
    for (const auto& [n, le] : log_inv_errors) {
        const double res = std::log(le) - (fit.intercept + fit.p * std::log(n));
        ss += res * res;
    }
    fit.residual = std::sqrt(ss / k);
    return fit;
}

RateFit fit_exponential_rate(const std::vector<std::pair<double, double>>& errors) {
    std::vector<std::pair<double, double>> logs;
    logs.reserve(errors.size());
    for (const auto& [n, e] : errors) {
        if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument("rate fit needs errors in (0,1)");
        logs.emplace_back(n, -std::log(e));
    }
    return fit_exponential_rate_log(logs);
}

} // namespace korobov
