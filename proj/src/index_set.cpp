#include "korobov/index_set.hpp"

#include "korobov/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace korobov {

bool FrequencyIndex::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

FrequencyIndex operator+(const FrequencyIndex& x, const FrequencyIndex& y) {
    if (x.size() != y.size()) throw std::invalid_argument("frequency index dimension mismatch");
    std::vector<std::int64_t> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] + y[j];
    return FrequencyIndex(std::move(out));
}

double coordinate_exponent(double a, double b, std::int64_t h) {
    if (h == 0) return 0.0;
    const auto m = static_cast<double>(h < 0 ? -h : h);
    return a * (b == 1.0 ? m : std::pow(m, b));
}

double exponent(Weights w, const FrequencyIndex& h) {
    if (h.size() != w.size()) {
        throw std::invalid_argument("dimension mismatch: index has " + std::to_string(h.size()) +
                                    " components, space has " + std::to_string(w.size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) sum += coordinate_exponent(w.a[j], w.b[j], h[j]);
    return sum;
}

double exponent(const KorobovParams& params, const FrequencyIndex& h) {
    return exponent(weights_of(params), h);
}

double x_of_eps(double omega, double eps) {
    if (!(omega > 0.0 && omega < 1.0)) throw std::invalid_argument("omega out of range (0,1)");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps out of range (0,1)");
    return 2.0 * std::log(1.0 / eps) / std::log(1.0 / omega);
}

std::int64_t max_abs_below(double a, double b, double x) {
    if (!(x > 0.0)) return -1;
    if (std::isinf(a)) return 0;
    const double y = std::pow(x / a, 1.0 / b);
    if (!(y < 4.0e18)) throw std::overflow_error("coordinate range exceeds 64-bit integers");
    auto h = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(y)) - 1);
    // pow() may land one ulp off an integer root; settle in exponent space.
    while (coordinate_exponent(a, b, h + 1) < x) ++h;
    while (h > 0 && coordinate_exponent(a, b, h) >= x) --h;
    return h;
}

namespace {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max() / 4;

// n(remaining, dims) for the leading `dims` coordinates, or cap + 1 once the
// running total passes `cap`.
std::uint64_t count_rec(Weights w, std::size_t dims, double remaining, std::uint64_t cap) {
    if (!(remaining > 0.0)) return 0;
    const std::size_t j = dims - 1;
    const std::int64_t H = max_abs_below(w.a[j], w.b[j], remaining);
    if (dims == 1) {
        const auto n = static_cast<std::uint64_t>(2 * H + 1);
        return n > cap ? cap + 1 : n;
    }
    std::uint64_t total = count_rec(w, dims - 1, remaining, cap);
    if (total > cap) return cap + 1;
    for (std::int64_t h = 1; h <= H; ++h) {
        const std::uint64_t sub = count_rec(w, dims - 1, remaining - coordinate_exponent(w.a[j], w.b[j], h), cap);
        if (sub > cap) return cap + 1;
        total += 2 * sub;
        if (total > cap) return cap + 1;
    }
    return total;
}

void enumerate_rec(Weights w, std::size_t dims, double remaining, std::vector<std::int64_t>& current,
                   std::vector<IndexEntry>& out) {
    if (!(remaining > 0.0)) return;
    const std::size_t j = dims - 1;
    const std::int64_t H = max_abs_below(w.a[j], w.b[j], remaining);
    for (std::int64_t h = -H; h <= H; ++h) {
        current[j] = h;
        if (dims == 1) {
            FrequencyIndex idx(current);
            const double e = exponent(w, idx);
            out.push_back({std::move(idx), e});
        } else {
            enumerate_rec(w, dims - 1, remaining - coordinate_exponent(w.a[j], w.b[j], h), current, out);
        }
    }
    current[j] = 0;
}

} // namespace

std::optional<std::uint64_t> count_capped(Weights w, double x, std::uint64_t cap) {
    if (w.size() == 0) throw std::invalid_argument("empty weights");
    cap = std::min(cap, kNoCap);
    const std::uint64_t n = count_rec(w, w.size(), x, cap);
    if (n > cap) return std::nullopt;
    return n;
}

std::uint64_t count(Weights w, double x) {
    auto n = count_capped(w, x, kNoCap);
    if (!n) throw std::overflow_error("index-set count overflows");
    return *n;
}

std::uint64_t count(const KorobovParams& params, double x) { return count(weights_of(params), x); }

bool IndexSet::contains(const FrequencyIndex& h) const {
    return std::any_of(members.begin(), members.end(), [&](const IndexEntry& e) { return e.h == h; });
}

IndexSet enumerate(Weights w, double x, std::uint64_t cap) {
    IndexSet set;
    set.threshold_x = x;
    const auto n = count_capped(w, x, cap);
    if (!n) {
        const auto known = count_capped(w, x, cap > kNoCap / 16 ? kNoCap : 16 * cap);
        throw CapExceeded("index set size exceeds cap " + std::to_string(cap) +
                              (known ? " (count " + std::to_string(*known) + ")" : std::string{}),
                          known);
    }
    set.members.reserve(static_cast<std::size_t>(*n));
    std::vector<std::int64_t> current(w.size(), 0);
    enumerate_rec(w, w.size(), x, current, set.members);
    std::sort(set.members.begin(), set.members.end(), [](const IndexEntry& l, const IndexEntry& r) {
        if (l.exponent != r.exponent) return l.exponent < r.exponent;
        return l.h < r.h;
    });
    return set;
}

IndexSet enumerate(const KorobovParams& params, double x, std::uint64_t cap) {
    return enumerate(weights_of(params), x, cap);
}

JIndex j_of_x(const KorobovParams& params, double x) {
    const SequenceFamily& a = params.a_family();
    if (!(x > a.term(1))) throw std::invalid_argument("j(x) needs x > a_1");
    const ExtendedValue lim = limit(a);
    if (lim.is_unknown()) throw std::invalid_argument("j(x) undecidable: a has no declared tail rule");
    // a is nondecreasing, so a finite limit is its supremum.
    if (lim.is_finite() && x > lim.value) return {true, 0};
    constexpr std::int64_t kMaxScan = 100000000;
    std::int64_t j = 1;
    while (a.term(j + 1) < x) {
        if (++j > kMaxScan) throw std::runtime_error("j(x) scan did not terminate");
    }
    return {false, j};
}

CountBounds lemma1_bounds(const KorobovParams& params, double x, std::optional<std::vector<double>> alphas) {
    const int s = params.s();
    const auto& a = params.a();
    const auto& b = params.b();
    if (!(x > a[0])) throw std::invalid_argument("product bounds need x > a_1");

    std::vector<double> weight(static_cast<std::size_t>(s));
    if (!alphas) {
        std::fill(weight.begin(), weight.end(), 1.0 / s);
    } else {
        if (alphas->size() != static_cast<std::size_t>(s)) throw std::invalid_argument("alphas must have length s");
        for (double al : *alphas)
            if (!(al >= 0.0 && al <= 1.0)) throw std::invalid_argument("alphas out of [0,1]");
        double tail_product = 1.0;
        for (int j = s - 1; j >= 0; --j) {
            weight[j] = (1.0 - (*alphas)[j]) * tail_product;
            tail_product *= (*alphas)[j];
        }
    }

    // min(s, j(x)): a is nondecreasing on 1..s, so only the first s terms matter.
    int J = 0;
    while (J < s && a[J] < x) ++J;

    CountBounds out{1.0, 1.0};
    for (int j = 0; j < J; ++j) {
        const auto lower = 2 * max_abs_below(a[j], b[j], x * weight[j]) + 1;
        out.lower *= static_cast<double>(std::max<std::int64_t>(1, lower));
        out.upper *= static_cast<double>(2 * max_abs_below(a[j], b[j], x) + 1);
    }
    return out;
}

double count_upper_pt(const KorobovParams& params, double x, double delta, std::int64_t j_star) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (j_star < 1) throw std::invalid_argument("j_star must be >= 1");
    if (!(x > params.a()[0])) throw std::invalid_argument("bound needs x > a_1");
    for (std::int64_t j = j_star; j <= params.s(); ++j) {
        if (params.a()[static_cast<std::size_t>(j - 1)] < std::exp(delta * static_cast<double>(j))) {
            throw std::invalid_argument("a_j >= exp(delta j) fails at j = " + std::to_string(j));
        }
    }
    return std::pow(3.0, static_cast<double>(j_star)) * std::pow(x, params.B_s() + std::log(3.0) / delta);
}

} // namespace korobov
