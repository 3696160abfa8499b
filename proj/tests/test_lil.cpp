#include <doctest.h>

#include <cmath>

#include "beatty/beatty_set.hpp"
#include "beatty/decomposition.hpp"
#include "beatty/errors.hpp"
#include "beatty/lil.hpp"
#include "beatty/rng.hpp"

using namespace beatty;

TEST_SUITE_BEGIN("lil");

namespace {
const AlphaValue kInvSqrt2 = AlphaValue::quadratic(0, 1, 2, 2);  // sqrt(2)/2
}

TEST_CASE("increments at lambda = 1/2 alternate +-1/2") {
    const AlphaValue half = AlphaValue::rational(1, 2);
    for (std::int64_t m = 1; m <= 20; ++m) {
        const double expect = (m % 2 == 1) ? 0.5 : -0.5;
        CHECK(increment(m, half) == expect);
    }
}

TEST_CASE("increment equals -lambda while no integer is crossed") {
    const AlphaValue tenth = AlphaValue::rational(1, 10);
    for (std::int64_t m = 1; m <= 8; ++m) {
        CHECK(increment(m, tenth) == doctest::Approx(-0.1).epsilon(1e-14));
    }
    CHECK(increment(9, tenth) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("increments are bounded by 1") {
    Xoshiro256StarStar rng(stream_seed(7, 40));
    for (int trial = 0; trial < 200; ++trial) {
        const AlphaValue lam = AlphaValue::decimal(uniform_unit_literal(rng, 40), 40);
        const auto m = static_cast<std::int64_t>(rng.next_below(10000)) + 1;
        CHECK(std::abs(increment(m, lam)) <= 1.0);
    }
}

TEST_CASE("increment table matches the pointwise evaluation") {
    const auto inc = sawtooth_increments(kInvSqrt2, 300);
    for (std::int64_t m = 1; m <= 300; ++m) {
        CHECK(inc[static_cast<std::size_t>(m - 1)] ==
              doctest::Approx(increment(m, kInvSqrt2)).epsilon(1e-13));
    }
}

TEST_CASE("s_squared: exact value at lambda = 1/2, monotone growth") {
    CHECK(s_squared(AlphaValue::rational(1, 2), 100) == 25.0);
    double prev = 0.0;
    for (const std::int64_t x : {10, 100, 1000, 5000}) {
        const double s = s_squared(kInvSqrt2, x);
        CHECK(s >= prev);
        prev = s;
    }
}

TEST_CASE("s_squared/x approaches lambda(1-lambda)") {
    const double lambda = 1.0 / std::sqrt(2.0);
    const double expect = lambda * (1.0 - lambda);
    const double ratio = s_squared(kInvSqrt2, 100000) / 100000.0;
    CHECK(std::abs(ratio - expect) <= 0.02);
}

TEST_CASE("walk: determinism and bookkeeping invariants") {
    const WalkTrajectory a = walk(kInvSqrt2, 5000, 7);
    const WalkTrajectory b = walk(kInvSqrt2, 5000, 7);
    CHECK(a.S == b.S);
    CHECK(a.s_sq == b.s_sq);
    CHECK(a.checkpoints.back() == 5000);

    // s_sq at checkpoints matches the standalone prefix
    for (std::size_t i = 0; i < a.checkpoints.size(); i += 7) {
        CHECK(a.s_sq[i] ==
              doctest::Approx(s_squared(kInvSqrt2, a.checkpoints[i])).epsilon(1e-12));
    }
    // lil_stat defined exactly where s_sq >= 8
    for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
        CHECK(std::isnan(a.lil_stat[i]) == (a.s_sq[i] < 8.0));
        if (!std::isnan(a.lil_stat[i])) {
            const double denom =
                std::sqrt(2.0 * a.s_sq[i] * std::log(std::log(a.s_sq[i])));
            CHECK(a.lil_stat[i] == doctest::Approx(a.S[i] / denom).epsilon(1e-12));
        }
    }

    const WalkTrajectory c = walk(kInvSqrt2, 5000, 8);
    CHECK(a.S != c.S);
}

TEST_CASE("walk signs agree with rademacher_table") {
    const auto signs = rademacher_signs(200, 7);
    const FunctionTable table = rademacher_table(200, 7);
    for (std::int64_t m = 1; m <= 200; ++m) {
        CHECK(signs[static_cast<std::size_t>(m - 1)] == table.int_value(m));
    }
}

TEST_CASE("sample variance over seeds approaches the exact s^2") {
    const std::int64_t x = 2000;
    const int n_seeds = 400;
    const auto inc = sawtooth_increments(kInvSqrt2, x);
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n_seeds; ++i) {
        const auto t = walk_from(kInvSqrt2, inc, rademacher_signs(x, stream_seed(7, i)),
                                 stream_seed(7, i), {x});
        sum += t.S[0];
        sum_sq += t.S[0] * t.S[0];
    }
    const double n = n_seeds;
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    const double exact = s_squared(kInvSqrt2, x);
    CHECK(std::abs(var - exact) <= 0.25 * exact);
}

TEST_CASE("witness: sign symmetry and sub-Gaussian envelope") {
    const std::int64_t x = 100000;
    const auto inc = sawtooth_increments(kInvSqrt2, x);
    for (int i = 0; i < 5; ++i) {
        auto signs = rademacher_signs(x, stream_seed(7, i));
        const WitnessResult w =
            witness_from(walk_from(kInvSqrt2, inc, signs, 0, {}));
        for (auto& s : signs) s = -s;
        const WitnessResult flipped =
            witness_from(walk_from(kInvSqrt2, inc, signs, 0, {}));
        CHECK(w.witness == flipped.witness);
        CHECK(w.x_star == flipped.x_star);
        CHECK(w.witness <= 3.0);
        CHECK(w.x_star >= 16);
    }
    CHECK_THROWS_AS(lower_bound_witness(kInvSqrt2, 8, 7), Error);
}

TEST_CASE("walk error-term linkage with the Beatty decomposition") {
    // alpha = sqrt(2), lambda = 1/alpha = sqrt(2)/2: S_alpha - alpha^{-1} S
    // equals the walk partial sum up to the below-threshold boundary terms,
    // which are bounded by alpha + 2.
    const AlphaValue alpha = AlphaValue::quadratic(0, 1, 2, 1);
    const std::int64_t x = 2000;
    for (const std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        const FunctionTable f0 = rademacher_table(x, seed);
        const WalkTrajectory t = walk(kInvSqrt2, x, seed, {x});
        const double s_walk = t.S[0];
        const double s_alpha =
            beatty_sum(f0, alpha, AlphaValue::integer(0), x).real();
        const double s_plain = plain_sum(f0, x).real();
        const double err = s_alpha - s_plain / alpha.to_double();
        CHECK(std::abs(err - s_walk) <= alpha.to_double() + 2.0);
    }
}

TEST_CASE("lambda domain is enforced") {
    CHECK_THROWS_AS(increment(1, AlphaValue::integer(2)), Error);
    CHECK_THROWS_AS(s_squared(AlphaValue::integer(0), 10), Error);
    CHECK_THROWS_AS(walk(AlphaValue::rational(3, 2), 100, 1), Error);
}

TEST_SUITE_END();
