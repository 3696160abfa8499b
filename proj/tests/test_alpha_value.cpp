#include <doctest.h>

#include "beatty/alpha_value.hpp"
#include "beatty/errors.hpp"

using namespace beatty;

TEST_SUITE_BEGIN("alpha_value");

namespace {
const AlphaValue kSqrt2 = AlphaValue::quadratic(0, 1, 2, 1);
}

TEST_CASE("value_compare on quadratic and rational forms") {
    // 1*sqrt(2) vs 1
    CHECK(value_compare(1, kSqrt2, 1) == Ordering::GT);
    // 5*sqrt(2) = 7.07.. vs 7, decided by 50 > 49
    CHECK(value_compare(5, kSqrt2, 7) == Ordering::GT);
    CHECK(value_compare(5, kSqrt2, 8) == Ordering::LT);
    // 2*(3/2) == 3
    CHECK(value_compare(2, AlphaValue::rational(3, 2), 3) == Ordering::EQ);
    // with a beta term: 2*sqrt(2) + 1/2 vs 3  (2.828+0.5 = 3.328 > 3)
    CHECK(value_compare(2, kSqrt2, AlphaValue::rational(1, 2), 3) == Ordering::GT);
    CHECK(value_compare(2, kSqrt2, AlphaValue::rational(1, 2), 4) == Ordering::LT);
}

TEST_CASE("negative quadratic combinations") {
    // sqrt(3) - 1 = (-1 + sqrt(3))/1 ~ 0.732
    const AlphaValue v = AlphaValue::quadratic(-1, 1, 3, 1);
    CHECK(value_compare(1, v, 0) == Ordering::GT);
    CHECK(value_compare(1, v, 1) == Ordering::LT);
    CHECK(value_compare(4, v, 2) == Ordering::GT);  // 4*0.732 = 2.93
    CHECK(value_compare(4, v, 3) == Ordering::LT);
}

TEST_CASE("mixed radicands are rejected") {
    const AlphaValue sqrt3 = AlphaValue::quadratic(0, 1, 3, 1);
    CHECK_THROWS_AS(value_compare(1, kSqrt2, sqrt3, 2), Error);
    try {
        value_compare(1, kSqrt2, sqrt3, 2);
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::MixedRadicands);
    }
    // decimal + quadratic is likewise not exactly combinable
    const AlphaValue pi = AlphaValue::decimal("3.14159265358979323846264338327950288419716939937510");
    CHECK_THROWS_AS(value_compare(1, pi, kSqrt2, 4), Error);
}

TEST_CASE("decimal comparisons certify at the stated precision") {
    const AlphaValue pi =
        AlphaValue::decimal("3.14159265358979323846264338327950288419716939937510");
    CHECK(value_compare(1, pi, 3) == Ordering::GT);
    CHECK(value_compare(1, pi, 4) == Ordering::LT);
    CHECK(value_compare(7, pi, 21) == Ordering::GT);   // 21.99…
    CHECK(value_compare(7, pi, 22) == Ordering::LT);

    // an exact tie can never be certified from decimal data
    const AlphaValue two = AlphaValue::decimal("2.0");
    CHECK_THROWS_AS(value_compare(1, two, 2), Error);
    try {
        value_compare(1, two, 2);
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::AmbiguousComparison);
    }
}

TEST_CASE("raising decimal precision separates close calls") {
    // value - 2 = 1e-39
    const std::string lit = "2.000000000000000000000000000000000000001";
    const AlphaValue coarse = AlphaValue::decimal(lit, 30);
    CHECK_THROWS_AS(value_compare(1, coarse, 2), Error);
    const AlphaValue fine = AlphaValue::decimal(lit, 45);
    CHECK(value_compare(1, fine, 2) == Ordering::GT);
}

TEST_CASE("canonicalisation") {
    const AlphaValue r = AlphaValue::rational(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    const AlphaValue q = AlphaValue::quadratic(2, 4, 8, 6);
    CHECK(q.quad_p() == 1);
    CHECK(q.quad_q() == 2);
    CHECK(q.quad_d() == 8);
    CHECK(q.quad_r() == 3);
    // q = 0 demotes to a rational value
    const AlphaValue demoted = AlphaValue::quadratic(3, 0, 2, 6);
    CHECK(demoted.kind() == AlphaValue::Kind::Rational);
    CHECK(demoted.num() == 1);
    CHECK(demoted.den() == 2);
    CHECK_THROWS_AS(AlphaValue::quadratic(0, 1, 9, 1), Error);  // 9 is a square
    CHECK_THROWS_AS(AlphaValue::rational(1, 0), Error);
    CHECK_THROWS_AS(AlphaValue::decimal("1.5", 8), Error);  // precision floor is 30
}

TEST_CASE("parse round-trips the CLI grammar") {
    CHECK(AlphaValue::parse("rat:3/2") == AlphaValue::rational(3, 2));
    CHECK(AlphaValue::parse("rat:5") == AlphaValue::integer(5));
    CHECK(AlphaValue::parse("quad:0,1,2,1") == kSqrt2);
    const AlphaValue d = AlphaValue::parse("dec:3.14159265358979323846");
    CHECK(d.kind() == AlphaValue::Kind::Decimal);
    CHECK(d.precision() == 50);
    CHECK(d.to_spec_string() == "dec:3.14159265358979323846");
    CHECK(kSqrt2.to_spec_string() == "quad:0,1,2,1");
    CHECK(AlphaValue::rational(3, 2).to_spec_string() == "rat:3/2");
    CHECK_THROWS_AS(AlphaValue::parse("quad:1,2"), Error);
    CHECK_THROWS_AS(AlphaValue::parse("nonsense"), Error);
    CHECK_THROWS_AS(AlphaValue::parse("rat:1/2/3"), Error);
}

TEST_CASE("floor_linear matches direct evaluation") {
    // floor(n*sqrt(2)) for n = 1..8: 1,2,4,5,7,8,9,11
    const std::int64_t expected[] = {1, 2, 4, 5, 7, 8, 9, 11};
    for (std::int64_t n = 1; n <= 8; ++n) {
        CHECK(floor_linear(n, kSqrt2) == expected[n - 1]);
    }
    const AlphaValue half = AlphaValue::rational(1, 2);
    CHECK(floor_linear(5, half) == 2);
    CHECK(floor_linear(4, half) == 2);
    const AlphaValue beta = AlphaValue::integer(3);
    CHECK(floor_linear(1, kSqrt2, &beta) == 4);
    CHECK(floor_linear(5, kSqrt2, &beta) == 10);
}

TEST_CASE("to_bigfloat and to_double agree") {
    for (const AlphaValue& v :
         {kSqrt2, AlphaValue::rational(22, 7),
          AlphaValue::decimal("0.70710678118654752440084436210484903928483593768847")}) {
        CHECK(v.to_double() ==
              doctest::Approx(v.to_bigfloat().convert_to<double>()).epsilon(1e-14));
    }
}

TEST_CASE("sign_minus_double is exact against representable bounds") {
    CHECK(sign_minus_double(kSqrt2, 1.0) > 0);
    CHECK(sign_minus_double(kSqrt2, 2.0) < 0);
    CHECK(sign_minus_double(kSqrt2, 1.5) < 0);
    CHECK(sign_minus_double(AlphaValue::rational(3, 2), 1.5) == 0);
    CHECK(sign_minus_double(AlphaValue::rational(3, 2), 0.0) > 0);
}

TEST_SUITE_END();
