#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "beatty/beatty_set.hpp"
#include "beatty/errors.hpp"

using namespace beatty;

TEST_SUITE_BEGIN("beatty_set");

namespace {
const AlphaValue kSqrt2 = AlphaValue::quadratic(0, 1, 2, 1);
const AlphaValue kZero = AlphaValue::integer(0);
const AlphaValue kPi =
    AlphaValue::decimal("3.14159265358979323846264338327950288419716939937510");
}  // namespace

TEST_CASE("B(2) is the even numbers") {
    const AlphaValue two = AlphaValue::integer(2);
    CHECK(beatty_member(4, two, kZero));
    CHECK_FALSE(beatty_member(3, two, kZero));
    CHECK(beatty_member(2, two, kZero));
    CHECK_FALSE(beatty_member(1, two, kZero));
}

TEST_CASE("B(sqrt(2)) membership agrees with hand enumeration") {
    // floor(n sqrt 2) = 1,2,4,5,7,8,9,11,...
    CHECK(beatty_member(9, kSqrt2, kZero));
    CHECK_FALSE(beatty_member(10, kSqrt2, kZero));
    const BeattyWindow w = beatty_enumerate(kSqrt2, kZero, 10);
    CHECK(w.elements == std::vector<std::int64_t>{1, 2, 4, 5, 7, 8, 9});
}

TEST_CASE("decimal alpha: floor(pi) = 3 is a member") {
    CHECK(beatty_member(3, kPi, kZero));
    CHECK_FALSE(beatty_member(4, kPi, kZero));
    CHECK(beatty_member(6, kPi, kZero));  // floor(2 pi)
}

TEST_CASE("enumeration with alpha = 1 and with a shift") {
    const BeattyWindow all = beatty_enumerate(AlphaValue::integer(1), kZero, 5);
    CHECK(all.elements == std::vector<std::int64_t>{1, 2, 3, 4, 5});

    const BeattyWindow shifted = beatty_enumerate(kSqrt2, AlphaValue::integer(3), 10);
    CHECK(shifted.elements == std::vector<std::int64_t>{4, 5, 7, 8, 10});
}

TEST_CASE("membership matches enumeration across kinds and shifts") {
    const std::int64_t x = 20000;
    const AlphaValue alphas[] = {
        kSqrt2,
        AlphaValue::quadratic(3, 2, 7, 4),  // (3 + 2 sqrt 7)/4 ~ 2.07
        AlphaValue::rational(7, 3),
        kPi,
    };
    const AlphaValue betas[] = {kZero, AlphaValue::integer(1), AlphaValue::rational(5, 2)};
    for (const auto& alpha : alphas) {
        for (const auto& beta : betas) {
            const BeattyWindow w = beatty_enumerate(alpha, beta, x);
            std::set<std::int64_t> members(w.elements.begin(), w.elements.end());
            for (std::int64_t m = 1; m <= x; ++m) {
                const bool expect = members.count(m) > 0;
                CHECK_MESSAGE(beatty_member(m, alpha, beta) == expect,
                              "alpha=", alpha.to_spec_string(),
                              " beta=", beta.to_spec_string(), " m=", m);
            }
        }
    }
}

TEST_CASE("gap law: consecutive gaps are floor(alpha) or floor(alpha)+1") {
    Xoshiro256StarStar rng(stream_seed(42, 1000));
    for (int trial = 0; trial < 10; ++trial) {
        const AlphaValue alpha = sample_alpha(rng, 1.0, 10.0);
        const std::int64_t fl = floor_linear(1, alpha);
        const BeattyWindow w = beatty_enumerate(alpha, kZero, 5000);
        for (const std::int64_t g : w.gaps()) {
            const bool ok = g == fl || g == fl + 1;
            CHECK_MESSAGE(ok, "alpha=", alpha.to_spec_string(), " gap=", g);
        }
    }
}

TEST_CASE("density: window size stays within 2 of x/alpha") {
    Xoshiro256StarStar rng(stream_seed(42, 2000));
    for (int trial = 0; trial < 10; ++trial) {
        const AlphaValue alpha = sample_alpha(rng, 1.0, 10.0);
        for (const std::int64_t x : {100, 1000, 20000}) {
            const BeattyWindow w = beatty_enumerate(alpha, kZero, x);
            const double expected = static_cast<double>(x) / alpha.to_double();
            CHECK(std::abs(static_cast<double>(w.elements.size()) - expected) <= 2.0);
        }
    }
}

TEST_CASE("windows are identical when the working precision doubles") {
    Xoshiro256StarStar rng(stream_seed(42, 3000));
    const AlphaValue alpha = sample_alpha(rng, 1.0, 10.0);
    const BeattyWindow w50 = beatty_enumerate(alpha, kZero, 20000);
    set_working_precision(100);
    const BeattyWindow w100 = beatty_enumerate(alpha, kZero, 20000);
    set_working_precision(50);
    CHECK(w50.elements == w100.elements);
}

TEST_CASE("sample_alpha: range, determinism, canonical form") {
    Xoshiro256StarStar a(stream_seed(7, 0)), b(stream_seed(7, 0));
    const AlphaValue va = sample_alpha(a, 1.0, 2.0);
    const AlphaValue vb = sample_alpha(b, 1.0, 2.0);
    CHECK(va == vb);  // same stream state, same draw
    CHECK(va.kind() == AlphaValue::Kind::Quadratic);
    CHECK(sign_minus_double(va, 1.0) > 0);
    CHECK(sign_minus_double(va, 2.0) < 0);
    // successive draws differ
    const AlphaValue vc = sample_alpha(a, 1.0, 2.0);
    CHECK_FALSE(vc == va);
    // canonical: gcd(p, q, r) = 1
    const std::int64_t g = std::gcd(std::gcd(std::abs(va.quad_p()), va.quad_q()),
                                    va.quad_r());
    CHECK(g == 1);
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(beatty_enumerate(AlphaValue::rational(1, 2), kZero, 10), Error);
    CHECK_THROWS_AS(beatty_member(3, kSqrt2, AlphaValue::integer(-1)), Error);
    Xoshiro256StarStar rng(1);
    CHECK_THROWS_AS(sample_alpha(rng, 0.5, 2.0), Error);
    CHECK_THROWS_AS(sample_alpha(rng, 3.0, 2.0), Error);
}

TEST_SUITE_END();
