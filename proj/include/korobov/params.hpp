#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace korobov {

/// Closed-form description of a positive real sequence c_1, c_2, ... .
///
/// The weight sequences of the space are described by family rather than by
/// raw arrays so that limits, liminfs and series of the *whole* sequence can
/// be evaluated analytically (see tractability.hpp).
class SequenceFamily {
public:
    enum class Kind {
        constant,        // c
        power,           // c * j^k
        geometric,       // c * r^j
        exponential,     // c * exp(alpha * j)
        superexponential,// c * exp(alpha * j^k), k >= 1
        explicit_list,   // listed values, then a tail rule
    };

    enum class Tail {
        none,         // no declared continuation; asymptotics undecidable
        repeat_last,  // last listed value repeated forever
        continuation, // values from a nested family, evaluated at the absolute index j
    };

    static SequenceFamily constant(double c);
    static SequenceFamily power(double c, double k);
    static SequenceFamily geometric(double c, double r);
    static SequenceFamily exponential(double c, double alpha);
    static SequenceFamily superexponential(double c, double alpha, double k);
    static SequenceFamily explicit_list(std::vector<double> values, Tail tail = Tail::none);
    static SequenceFamily explicit_list(std::vector<double> values, SequenceFamily continuation);

    /// Term j (1-based).  Throws std::invalid_argument for j = 0, and for an
    /// explicit list without tail rule when j is past the listed values.
    double term(std::int64_t j) const;

    Kind kind() const noexcept { return kind_; }
    Tail tail() const noexcept { return tail_; }
    double c() const noexcept { return c_; }
    /// Second parameter: k for power, r for geometric, alpha for (super)exponential.
    double p() const noexcept { return p_; }
    /// Third parameter: k for superexponential.
    double q() const noexcept { return q_; }
    const std::vector<double>& values() const noexcept { return values_; }
    /// Nested family of an explicit list with Tail::continuation, else nullptr.
    const SequenceFamily* continuation() const noexcept { return next_.get(); }

    bool operator==(const SequenceFamily& other) const;

    SequenceFamily(const SequenceFamily& other);
    SequenceFamily& operator=(const SequenceFamily& other);
    SequenceFamily(SequenceFamily&&) noexcept = default;
    SequenceFamily& operator=(SequenceFamily&&) noexcept = default;
    ~SequenceFamily() = default;

private:
    SequenceFamily() = default;

    Kind kind_ = Kind::constant;
    Tail tail_ = Tail::none;
    double c_ = 1.0;
    double p_ = 0.0;
    double q_ = 0.0;
    std::vector<double> values_;
    std::unique_ptr<SequenceFamily> next_;
};

enum class ParamsErrorCode {
    omega_out_of_range,
    dimension_invalid,
    a_below_one,
    b_below_one,
    a_nonmonotone,
    index_invalid,
};

const char* to_string(ParamsErrorCode code);

class ParamsError : public std::invalid_argument {
public:
    ParamsError(ParamsErrorCode code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}
    ParamsErrorCode code() const noexcept { return code_; }

private:
    ParamsErrorCode code_;
};

/// Unvalidated parameter bundle, as read from a config file.
struct ParamsSpec {
    double omega = 0.5;
    SequenceFamily a = SequenceFamily::constant(1.0);
    SequenceFamily b = SequenceFamily::constant(1.0);
    int s = 1;
};

/// Validated parameterization (omega, a, b, s) of the weighted Korobov space.
///
/// Immutable once built.  The first s terms of both sequences are
/// materialized since every algorithm touches them.
class KorobovParams {
public:
    double omega() const noexcept { return omega_; }
    /// log(1/omega) > 0
    double log_inv_omega() const noexcept { return log_inv_omega_; }
    int s() const noexcept { return s_; }
    const SequenceFamily& a_family() const noexcept { return a_; }
    const SequenceFamily& b_family() const noexcept { return b_; }

    /// a_j and b_j for j = 1..s, stored 0-based.
    const std::vector<double>& a() const noexcept { return a_terms_; }
    const std::vector<double>& b() const noexcept { return b_terms_; }

    /// B(s) = sum_{j<=s} 1/b_j
    double B_s() const noexcept { return B_s_; }

    /// Same omega and families with a different dimension (revalidated).
    KorobovParams with_dimension(int s) const;

    bool operator==(const KorobovParams& other) const {
        return omega_ == other.omega_ && s_ == other.s_ && a_ == other.a_ && b_ == other.b_;
    }

private:
    friend KorobovParams validate(const ParamsSpec& spec);
    KorobovParams(double omega, SequenceFamily a, SequenceFamily b, int s);

    double omega_;
    double log_inv_omega_;
    SequenceFamily a_;
    SequenceFamily b_;
    int s_;
    std::vector<double> a_terms_;
    std::vector<double> b_terms_;
    double B_s_ = 0.0;
};

/// Checks 0 < omega < 1, s >= 1, a_j >= 1 nondecreasing and b_j >= 1 for
/// j = 1..s.  Throws ParamsError carrying the first violation found.
KorobovParams validate(const ParamsSpec& spec);

KorobovParams make_params(double omega, SequenceFamily a, SequenceFamily b, int s);

/// a_j and b_j from the families (j >= 1, not limited to j <= s).
double a_term(const KorobovParams& params, std::int64_t j);
double b_term(const KorobovParams& params, std::int64_t j);

} // namespace korobov
