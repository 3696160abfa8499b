#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "beatty/bigfloat.hpp"

namespace beatty {

enum class Ordering { LT, EQ, GT };

// Real parameter (a Beatty modulus alpha, a shift beta, or a frequency
// lambda) in one of three representations:
//
//   rational   p/q                 exact, integer arithmetic only
//   quadratic  (p + q*sqrt(d))/r   exact, d a positive non-square; sign
//                                  questions reduce to comparing A^2 with
//                                  B^2*d for integers A, B
//   decimal    literal string      the literal is an exact rational; order
//                                  decisions are certified only when the
//                                  two sides are separated by more than the
//                                  stated precision allows, otherwise
//                                  AmbiguousComparison is raised
//
// Comparisons of the linear form n*alpha + beta against an integer m are
// exact for the first two kinds and certified for decimals, which is what
// makes Beatty membership decisions independent of floating-point state.
class AlphaValue {
  public:
    enum class Kind { Rational, Quadratic, Decimal };

    // Zero (rational 0/1).
    AlphaValue() = default;

    // Canonical constructors (gcd-reduced, positive denominators).
    static AlphaValue rational(std::int64_t p, std::int64_t q);
    static AlphaValue quadratic(std::int64_t p, std::int64_t q, std::int64_t d,
                                std::int64_t r);
    static AlphaValue decimal(std::string literal, int precision = 50);
    static AlphaValue integer(std::int64_t v) { return rational(v, 1); }

    // CLI grammar: "rat:p/q", "quad:p,q,d,r" meaning (p+q*sqrt(d))/r,
    // "dec:<literal>".  Decimal literals pick up `decimal_precision`.
    static AlphaValue parse(std::string_view text, int decimal_precision = 50);

    Kind kind() const { return kind_; }
    bool is_integer() const { return kind_ == Kind::Rational && den_ == 1; }
    std::int64_t integer_value() const;

    // Components (valid per kind).
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t quad_p() const { return num_; }
    std::int64_t quad_q() const { return quad_q_; }
    std::int64_t quad_d() const { return quad_d_; }
    std::int64_t quad_r() const { return den_; }
    const std::string& literal() const { return literal_; }
    int precision() const { return precision_; }

    double to_double() const;
    BigFloat to_bigfloat() const;  // at the current working precision
    std::string to_spec_string() const;

    bool operator==(const AlphaValue& other) const;

  private:
    Kind kind_ = Kind::Rational;
    // Rational: num_/den_.  Quadratic: (num_ + quad_q_*sqrt(quad_d_))/den_.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::int64_t quad_q_ = 0;
    std::int64_t quad_d_ = 0;
    // Decimal payload.
    std::string literal_;
    int precision_ = 0;
    boost::multiprecision::cpp_rational dec_value_;
    boost::multiprecision::cpp_rational dec_unc_;  // half-width at stated precision

    friend int sign_linear(std::int64_t n, const AlphaValue& a, const AlphaValue* b,
                           std::int64_t m);
};

// Exact (or certified) sign of n*a + b - m; pass b = nullptr for b = 0.
// Throws Error(MixedRadicands) for quadratics over different radicands or
// for decimal/quadratic mixtures, Error(AmbiguousComparison) when a decimal
// operand cannot be separated from the other side at its stated precision.
int sign_linear(std::int64_t n, const AlphaValue& a, const AlphaValue* b,
                std::int64_t m);

// Ordering of the linear form n*alpha + beta against the integer m.
Ordering value_compare(std::int64_t n, const AlphaValue& alpha, const AlphaValue& beta,
                       std::int64_t m);
Ordering value_compare(std::int64_t n, const AlphaValue& alpha, std::int64_t m);

// floor(n*a + b), exact; b may be nullptr.
std::int64_t floor_linear(std::int64_t n, const AlphaValue& a,
                          const AlphaValue* b = nullptr);

// Exact sign of a - x where x is interpreted as the exact binary rational
// the double represents.  Used to verify sampled values against bounds.
int sign_minus_double(const AlphaValue& a, double x);

}  // namespace beatty
