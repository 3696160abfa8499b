#include "beatty/alpha_value.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "beatty/errors.hpp"

namespace beatty {

namespace mp = boost::multiprecision;
using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

// Component magnitudes are capped at construction and the linear-form
// integers n, m at use, so that every A, B below fits comfortably in i128.
constexpr i64 kComponentLimit = 1'000'000'000;       // |p|, |q|, d, r
constexpr i64 kLinearLimit = 9'100'000'000'000'000;  // |n|, |m| (> 2^53)

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

mp::cpp_int to_cpp(i128 v) {
    const bool neg = v < 0;
    u128 uv = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mp::cpp_int r = static_cast<u64>(uv >> 64);
    r <<= 64;
    r += static_cast<u64>(uv);
    return neg ? mp::cpp_int(-r) : r;
}

// Sign of A + B*sqrt(d) for a positive non-square d.
int sign_quad(i128 A, i128 B, i64 d) {
    if (B == 0) return sgn(A);
    if (A == 0) return sgn(B);
    if ((A > 0) == (B > 0)) return A > 0 ? 1 : -1;
    const i128 abs_a = A < 0 ? -A : A;
    const i128 abs_b = B < 0 ? -B : B;
    int cmp;  // |A| vs |B|*sqrt(d)
    const i128 lim_a = static_cast<i128>(9e18);
    const double lim_b = 0.9 * std::sqrt(1.7e38 / static_cast<double>(d));
    if (abs_a <= lim_a && static_cast<double>(abs_b) <= lim_b) {
        const i128 a2 = abs_a * abs_a;
        const i128 b2d = abs_b * abs_b * static_cast<i128>(d);
        cmp = a2 > b2d ? 1 : (a2 < b2d ? -1 : 0);
    } else {
        mp::cpp_int a2 = to_cpp(abs_a);
        a2 *= a2;
        mp::cpp_int b2d = to_cpp(abs_b);
        b2d *= b2d;
        b2d *= d;
        cmp = a2.compare(b2d);
    }
    return A > 0 ? cmp : -cmp;
}

bool is_perfect_square(i64 d) {
    if (d < 0) return false;
    i64 s = static_cast<i64>(std::sqrt(static_cast<double>(d)));
    while (s > 0 && s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    return s * s == d;
}

void check_component(i64 v, const char* what) {
    if (v > kComponentLimit || v < -kComponentLimit) {
        throw Error(ErrorCategory::ConfigError,
                    std::string(what) + " exceeds supported magnitude 1e9");
    }
}

void check_linear(i64 v) {
    if (v > kLinearLimit || v < -kLinearLimit) {
        throw Error(ErrorCategory::CapacityExceeded,
                    "linear-form integer exceeds supported range");
    }
}

// (P + Q*sqrt(D))/R view shared by the rational and quadratic kinds.
struct QuadView {
    i64 p, q, d, r;
};

std::optional<QuadView> quad_view(const AlphaValue& v) {
    switch (v.kind()) {
        case AlphaValue::Kind::Rational:
            return QuadView{v.num(), 0, 0, v.den()};
        case AlphaValue::Kind::Quadratic:
            return QuadView{v.quad_p(), v.quad_q(), v.quad_d(), v.quad_r()};
        case AlphaValue::Kind::Decimal:
            return std::nullopt;
    }
    return std::nullopt;
}

mp::cpp_int pow10(int k) {
    mp::cpp_int r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

struct ParsedDecimal {
    mp::cpp_rational value;
    int leading_exponent;  // exponent of the first significant digit; 0 for zero
    std::string canonical;
};

ParsedDecimal parse_decimal_literal(std::string_view text) {
    std::string lit;
    lit.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) lit += c;
    }
    std::size_t i = 0;
    bool negative = false;
    if (i < lit.size() && (lit[i] == '+' || lit[i] == '-')) {
        negative = (lit[i] == '-');
        ++i;
    }
    std::string int_part, frac_part;
    while (i < lit.size() && std::isdigit(static_cast<unsigned char>(lit[i]))) {
        int_part += lit[i++];
    }
    if (i < lit.size() && lit[i] == '.') {
        ++i;
        while (i < lit.size() && std::isdigit(static_cast<unsigned char>(lit[i]))) {
            frac_part += lit[i++];
        }
    }
    if (i != lit.size() || (int_part.empty() && frac_part.empty())) {
        throw Error(ErrorCategory::ConfigError,
                    "unparseable decimal literal '" + std::string(text) + "'");
    }

    mp::cpp_int digits = 0;
    for (char c : int_part) digits = digits * 10 + (c - '0');
    for (char c : frac_part) digits = digits * 10 + (c - '0');
    mp::cpp_rational value(digits, pow10(static_cast<int>(frac_part.size())));
    if (negative) value = -value;

    int leading = 0;
    bool found = false;
    for (std::size_t k = 0; k < int_part.size() && !found; ++k) {
        if (int_part[k] != '0') {
            leading = static_cast<int>(int_part.size() - 1 - k);
            found = true;
        }
    }
    for (std::size_t k = 0; k < frac_part.size() && !found; ++k) {
        if (frac_part[k] != '0') {
            leading = -static_cast<int>(k + 1);
            found = true;
        }
    }

    std::string canonical = negative ? "-" : "";
    canonical += int_part.empty() ? "0" : int_part;
    if (!frac_part.empty()) {
        canonical += '.';
        canonical += frac_part;
    }
    return ParsedDecimal{std::move(value), leading, std::move(canonical)};
}

}  // namespace

AlphaValue AlphaValue::rational(i64 p, i64 q) {
    if (q == 0) throw Error(ErrorCategory::ConfigError, "rational denominator is zero");
    check_component(p, "rational numerator");
    check_component(q, "rational denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const i64 g = std::gcd(p < 0 ? -p : p, q);
    AlphaValue v;
    v.kind_ = Kind::Rational;
    v.num_ = g ? p / g : 0;
    v.den_ = g ? q / g : 1;
    return v;
}

AlphaValue AlphaValue::quadratic(i64 p, i64 q, i64 d, i64 r) {
    if (r == 0) throw Error(ErrorCategory::ConfigError, "quadratic denominator is zero");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    if (q == 0) return rational(p, r);  // demote; the radical part is absent
    check_component(p, "quadratic p");
    check_component(q, "quadratic q");
    check_component(d, "quadratic d");
    check_component(r, "quadratic r");
    if (d < 2 || is_perfect_square(d)) {
        throw Error(ErrorCategory::ConfigError,
                    "quadratic radicand must be a non-square integer >= 2");
    }
    i64 g = std::gcd(std::gcd(p < 0 ? -p : p, q < 0 ? -q : q), r);
    AlphaValue v;
    v.kind_ = Kind::Quadratic;
    v.num_ = p / g;
    v.quad_q_ = q / g;
    v.quad_d_ = d;
    v.den_ = r / g;
    return v;
}

AlphaValue AlphaValue::decimal(std::string literal, int precision) {
    if (precision < 30) {
        throw Error(ErrorCategory::ConfigError,
                    "decimal precision must be at least 30 significant digits");
    }
    ParsedDecimal parsed = parse_decimal_literal(literal);
    AlphaValue v;
    v.kind_ = Kind::Decimal;
    v.literal_ = std::move(parsed.canonical);
    v.precision_ = precision;
    v.dec_value_ = std::move(parsed.value);
    // Half-width of the certification interval: 10^(e+1-P) / 2 where e is
    // the exponent of the leading significant digit.
    const int k = parsed.leading_exponent + 1 - precision;
    if (k >= 0) {
        v.dec_unc_ = mp::cpp_rational(pow10(k), 2);
    } else {
        v.dec_unc_ = mp::cpp_rational(1, 2 * pow10(-k));
    }
    return v;
}

AlphaValue AlphaValue::parse(std::string_view text, int decimal_precision) {
    auto fail = [&] {
        return Error(ErrorCategory::ConfigError,
                     "bad value spec '" + std::string(text) +
                         "' (expected rat:p/q, quad:p,q,d,r or dec:<literal>)");
    };
    auto parse_i64 = [&](std::string_view s) -> i64 {
        if (s.empty()) throw fail();
        std::size_t pos = 0;
        i64 v;
        try {
            v = std::stoll(std::string(s), &pos);
        } catch (const std::exception&) {
            throw fail();
        }
        if (pos != s.size()) throw fail();
        return v;
    };

    if (text.rfind("rat:", 0) == 0) {
        std::string_view body = text.substr(4);
        const std::size_t slash = body.find('/');
        if (slash == std::string_view::npos) return rational(parse_i64(body), 1);
        return rational(parse_i64(body.substr(0, slash)), parse_i64(body.substr(slash + 1)));
    }
    if (text.rfind("quad:", 0) == 0) {
        std::string_view body = text.substr(5);
        i64 comp[4];
        for (int i = 0; i < 4; ++i) {
            const std::size_t comma = body.find(',');
            if ((i < 3) != (comma != std::string_view::npos)) throw fail();
            comp[i] = parse_i64(i < 3 ? body.substr(0, comma) : body);
            if (i < 3) body = body.substr(comma + 1);
        }
        return quadratic(comp[0], comp[1], comp[2], comp[3]);
    }
    if (text.rfind("dec:", 0) == 0) {
        return decimal(std::string(text.substr(4)), decimal_precision);
    }
    throw fail();
}

std::int64_t AlphaValue::integer_value() const {
    if (!is_integer()) {
        throw Error(ErrorCategory::ConfigError, "value is not an integer");
    }
    return num_;
}

double AlphaValue::to_double() const {
    switch (kind_) {
        case Kind::Rational:
            return static_cast<double>(num_) / static_cast<double>(den_);
        case Kind::Quadratic:
            return (static_cast<double>(num_) +
                    static_cast<double>(quad_q_) * std::sqrt(static_cast<double>(quad_d_))) /
                   static_cast<double>(den_);
        case Kind::Decimal:
            return std::strtod(literal_.c_str(), nullptr);
    }
    return 0.0;
}

BigFloat AlphaValue::to_bigfloat() const {
    switch (kind_) {
        case Kind::Rational:
            return BigFloat(num_) / den_;
        case Kind::Quadratic:
            return (BigFloat(num_) + BigFloat(quad_q_) * sqrt(BigFloat(quad_d_))) / den_;
        case Kind::Decimal:
            return BigFloat(literal_);
    }
    return BigFloat(0);
}

std::string AlphaValue::to_spec_string() const {
    switch (kind_) {
        case Kind::Rational:
            return "rat:" + std::to_string(num_) + "/" + std::to_string(den_);
        case Kind::Quadratic:
            return "quad:" + std::to_string(num_) + "," + std::to_string(quad_q_) + "," +
                   std::to_string(quad_d_) + "," + std::to_string(den_);
        case Kind::Decimal:
            return "dec:" + literal_;
    }
    return {};
}

bool AlphaValue::operator==(const AlphaValue& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Rational:
            return num_ == other.num_ && den_ == other.den_;
        case Kind::Quadratic:
            return num_ == other.num_ && quad_q_ == other.quad_q_ &&
                   quad_d_ == other.quad_d_ && den_ == other.den_;
        case Kind::Decimal:
            return literal_ == other.literal_ && precision_ == other.precision_;
    }
    return false;
}

int sign_linear(i64 n, const AlphaValue& a, const AlphaValue* b, i64 m) {
    check_linear(n);
    check_linear(m);

    const auto va = quad_view(a);
    const auto vb = b ? quad_view(*b) : std::optional<QuadView>(QuadView{0, 0, 0, 1});

    if (va && vb) {
        i64 d = 0;
        if (va->q != 0) d = va->d;
        if (vb->q != 0) {
            if (d != 0 && d != vb->d) {
                throw Error(ErrorCategory::MixedRadicands,
                            "cannot combine quadratic values over different radicands");
            }
            d = vb->d;
        }
        const i128 ra = va->r, rb = vb->r;
        const i128 A = static_cast<i128>(n) * va->p * rb + static_cast<i128>(vb->p) * ra -
                       static_cast<i128>(m) * ra * rb;
        if (d == 0) return sgn(A);
        const i128 B = static_cast<i128>(n) * va->q * rb + static_cast<i128>(vb->q) * ra;
        return sign_quad(A, B, d);
    }

    // At least one decimal operand: exact rational difference, certified
    // against the stated-precision interval width.  Decimal mixes with
    // rational values only.
    if ((va && va->q != 0) || (vb && vb->q != 0)) {
        throw Error(ErrorCategory::MixedRadicands,
                    "cannot combine decimal and quadratic values exactly");
    }

    auto rational_of = [](const AlphaValue& v) -> mp::cpp_rational {
        if (v.kind() == AlphaValue::Kind::Decimal) return v.dec_value_;
        return mp::cpp_rational(v.num(), v.den());
    };
    auto unc_of = [](const AlphaValue& v) -> mp::cpp_rational {
        if (v.kind() == AlphaValue::Kind::Decimal) return v.dec_unc_;
        return mp::cpp_rational(0);
    };

    mp::cpp_rational diff = rational_of(a);
    diff *= n;
    if (b) diff += rational_of(*b);
    diff -= m;

    mp::cpp_rational threshold = unc_of(a);
    threshold *= (n < 0 ? -n : n);
    if (b) threshold += unc_of(*b);

    if (abs(diff) <= threshold) {
        throw Error(ErrorCategory::AmbiguousComparison,
                    "decimal precision insufficient to separate the comparison; "
                    "raise the precision");
    }
    return diff > 0 ? 1 : -1;
}

Ordering value_compare(i64 n, const AlphaValue& alpha, const AlphaValue& beta, i64 m) {
    const int s = sign_linear(n, alpha, &beta, m);
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

Ordering value_compare(i64 n, const AlphaValue& alpha, i64 m) {
    const int s = sign_linear(n, alpha, nullptr, m);
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

std::int64_t floor_linear(i64 n, const AlphaValue& a, const AlphaValue* b) {
    const double est =
        static_cast<double>(n) * a.to_double() + (b ? b->to_double() : 0.0);
    if (!std::isfinite(est) || std::abs(est) > 9.0e15) {
        throw Error(ErrorCategory::CapacityExceeded, "floor_linear out of range");
    }
    i64 k = static_cast<i64>(std::floor(est));
    while (sign_linear(n, a, b, k) < 0) --k;        // need k <= n*a+b
    while (sign_linear(n, a, b, k + 1) >= 0) ++k;   // need n*a+b < k+1
    return k;
}

int sign_minus_double(const AlphaValue& a, double x) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCategory::ConfigError, "bound is not finite");
    }
    if (x == 0.0) return sign_linear(1, a, nullptr, 0);
    int exp = 0;
    const double mant_scaled = std::frexp(x, &exp);
    i64 mant = static_cast<i64>(std::ldexp(mant_scaled, 53));  // x = mant*2^(exp-53)
    int e2 = exp - 53;
    while ((mant % 2) == 0 && e2 < 0) {
        mant /= 2;
        ++e2;
    }
    // sign(a - mant*2^e2) = sign(2^(-e2)*a - mant)
    if (e2 > 0 || -e2 > 52) {
        throw Error(ErrorCategory::CapacityExceeded, "bound magnitude unsupported");
    }
    return sign_linear(static_cast<i64>(1) << (-e2), a, nullptr, mant);
}

}  // namespace beatty
