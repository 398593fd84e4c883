#include "korobov/params.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace korobov {

SequenceFamily SequenceFamily::constant(double c) {
    SequenceFamily f;
    f.kind_ = Kind::constant;
    f.c_ = c;
    return f;
}

SequenceFamily SequenceFamily::power(double c, double k) {
    SequenceFamily f;
    f.kind_ = Kind::power;
    f.c_ = c;
    f.p_ = k;
    return f;
}

SequenceFamily SequenceFamily::geometric(double c, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("geometric family needs r > 0");
    SequenceFamily f;
    f.kind_ = Kind::geometric;
    f.c_ = c;
    f.p_ = r;
    return f;
}

SequenceFamily SequenceFamily::exponential(double c, double alpha) {
    SequenceFamily f;
    f.kind_ = Kind::exponential;
    f.c_ = c;
    f.p_ = alpha;
    return f;
}

SequenceFamily SequenceFamily::superexponential(double c, double alpha, double k) {
    if (!(k >= 1.0)) throw std::invalid_argument("superexponential family needs k >= 1");
    SequenceFamily f;
    f.kind_ = Kind::superexponential;
    f.c_ = c;
    f.p_ = alpha;
    f.q_ = k;
    return f;
}

SequenceFamily SequenceFamily::explicit_list(std::vector<double> values, Tail tail) {
    if (tail == Tail::continuation)
        throw std::invalid_argument("continuation tail needs a family; use the two-argument overload");
    if (values.empty()) throw std::invalid_argument("explicit list must not be empty");
    SequenceFamily f;
    f.kind_ = Kind::explicit_list;
    f.tail_ = tail;
    f.values_ = std::move(values);
    return f;
}

SequenceFamily SequenceFamily::explicit_list(std::vector<double> values, SequenceFamily continuation) {
    SequenceFamily f;
    f.kind_ = Kind::explicit_list;
    f.tail_ = Tail::continuation;
    f.values_ = std::move(values);
    f.next_ = std::make_unique<SequenceFamily>(std::move(continuation));
    return f;
}

SequenceFamily::SequenceFamily(const SequenceFamily& other)
    : kind_(other.kind_), tail_(other.tail_), c_(other.c_), p_(other.p_), q_(other.q_),
      values_(other.values_),
      next_(other.next_ ? std::make_unique<SequenceFamily>(*other.next_) : nullptr) {}

SequenceFamily& SequenceFamily::operator=(const SequenceFamily& other) {
    if (this != &other) {
        SequenceFamily copy(other);
        *this = std::move(copy);
    }
    return *this;
}

bool SequenceFamily::operator==(const SequenceFamily& other) const {
    if (kind_ != other.kind_ || tail_ != other.tail_ || c_ != other.c_ || p_ != other.p_ ||
        q_ != other.q_ || values_ != other.values_)
        return false;
    if (static_cast<bool>(next_) != static_cast<bool>(other.next_)) return false;
    return !next_ || *next_ == *other.next_;
}

double SequenceFamily::term(std::int64_t j) const {
    if (j < 1) throw ParamsError(ParamsErrorCode::index_invalid, "sequence index must be >= 1");
    const auto x = static_cast<double>(j);
    switch (kind_) {
    case Kind::constant:
        return c_;
    case Kind::power:
        return c_ * std::pow(x, p_);
    case Kind::geometric:
        return c_ * std::pow(p_, x);
    case Kind::exponential:
        return c_ * std::exp(p_ * x);
    case Kind::superexponential:
        return c_ * std::exp(p_ * std::pow(x, q_));
    case Kind::explicit_list:
        if (static_cast<std::size_t>(j) <= values_.size()) return values_[static_cast<std::size_t>(j - 1)];
        switch (tail_) {
        case Tail::repeat_last:
            return values_.back();
        case Tail::continuation:
            return next_->term(j);
        case Tail::none:
            break;
        }
        throw ParamsError(ParamsErrorCode::index_invalid,
                          "explicit list without tail rule has no term " + std::to_string(j));
    }
    return c_;
}

const char* to_string(ParamsErrorCode code) {
    switch (code) {
    case ParamsErrorCode::omega_out_of_range: return "omega out of range";
    case ParamsErrorCode::dimension_invalid: return "dimension invalid";
    case ParamsErrorCode::a_below_one: return "a below one";
    case ParamsErrorCode::b_below_one: return "b below one";
    case ParamsErrorCode::a_nonmonotone: return "a nonmonotone";
    case ParamsErrorCode::index_invalid: return "index invalid";
    }
    return "unknown";
}

KorobovParams::KorobovParams(double omega, SequenceFamily a, SequenceFamily b, int s)
    : omega_(omega), log_inv_omega_(-std::log(omega)), a_(std::move(a)), b_(std::move(b)), s_(s) {
    a_terms_.reserve(static_cast<std::size_t>(s));
    b_terms_.reserve(static_cast<std::size_t>(s));
    for (int j = 1; j <= s; ++j) {
        a_terms_.push_back(a_.term(j));
        b_terms_.push_back(b_.term(j));
        B_s_ += 1.0 / b_terms_.back();
    }
}

KorobovParams KorobovParams::with_dimension(int s) const {
    return validate(ParamsSpec{omega_, a_, b_, s});
}

KorobovParams validate(const ParamsSpec& spec) {
    if (!(spec.omega > 0.0 && spec.omega < 1.0)) {
        std::ostringstream msg;
        msg << "omega out of range: " << spec.omega << " not in (0,1)";
        throw ParamsError(ParamsErrorCode::omega_out_of_range, msg.str());
    }
    if (spec.s < 1) throw ParamsError(ParamsErrorCode::dimension_invalid, "dimension s must be >= 1");

    double prev = 0.0;
    for (int j = 1; j <= spec.s; ++j) {
        const double aj = spec.a.term(j);
        const double bj = spec.b.term(j);
        if (!(aj >= 1.0)) {
            throw ParamsError(ParamsErrorCode::a_below_one,
                              "a below one: a_" + std::to_string(j) + " = " + std::to_string(aj));
        }
        if (!(bj >= 1.0)) {
            throw ParamsError(ParamsErrorCode::b_below_one,
                              "b below one: b_" + std::to_string(j) + " = " + std::to_string(bj));
        }
        if (j > 1 && aj < prev) {
            throw ParamsError(ParamsErrorCode::a_nonmonotone,
                              "a nonmonotone: a_" + std::to_string(j) + " < a_" + std::to_string(j - 1));
        }
        prev = aj;
    }
    return KorobovParams(spec.omega, spec.a, spec.b, spec.s);
}

KorobovParams make_params(double omega, SequenceFamily a, SequenceFamily b, int s) {
    return validate(ParamsSpec{omega, std::move(a), std::move(b), s});
}

double a_term(const KorobovParams& params, std::int64_t j) { return params.a_family().term(j); }
double b_term(const KorobovParams& params, std::int64_t j) { return params.b_family().term(j); }

} // namespace korobov
