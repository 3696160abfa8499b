#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "beatty/errors.hpp"
#include "beatty/function_table.hpp"
#include "beatty/rng.hpp"
#include "beatty/sawtooth.hpp"

using namespace beatty;

TEST_SUITE_BEGIN("sawtooth");

namespace {
const AlphaValue kSqrt2 = AlphaValue::quadratic(0, 1, 2, 1);
const AlphaValue kPi =
    AlphaValue::decimal("3.14159265358979323846264338327950288419716939937510");
}  // namespace

TEST_CASE("psi point values and range") {
    CHECK(psi(0.25) == -0.25);
    CHECK(psi(0.0) == -0.5);
    CHECK(psi(-0.25) == 0.25);
    CHECK(psi(2.25) == -0.25);
    Xoshiro256StarStar rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double t = 20.0 * rng.next_unit_open() - 10.0;
        const double v = psi(t);
        CHECK(v >= -0.5);
        CHECK(v < 0.5);
    }
    CHECK(psi(BigFloat("0.25")).convert_to<double>() == -0.25);
}

TEST_CASE("psi partial sums: odd symmetry and pointwise convergence") {
    for (const std::int64_t j : {1, 10, 100, 10000}) {
        CHECK(psi_partial_sum(0.0, j) == 0.0);
    }
    CHECK(psi_partial_sum(0.25, 10000) == doctest::Approx(-0.25).epsilon(1e-3));
    CHECK(psi_partial_sum(0.1, 20000) == doctest::Approx(psi(0.1)).epsilon(1e-3));
}

TEST_CASE("psi truncation: L2 tail identity") {
    const std::int64_t j_max = 10;
    // Exact coefficient tail: sum_{|j| > J} |c_j|^2 = sum_{j>J} 1/(2 pi^2 j^2).
    double tail = 0.0;
    for (std::int64_t j = 2000000; j > j_max; --j) {
        tail += 1.0 / (2.0 * M_PI * M_PI * static_cast<double>(j) * j);
    }
    // Crude closure 1/(2 pi^2 J) overshoots the exact tail only slightly.
    CHECK(tail == doctest::Approx(1.0 / (2.0 * M_PI * M_PI * 10.0)).epsilon(0.06));
    CHECK(tail > 4.5e-3);
    CHECK(tail < 5.5e-3);

    // Midpoint quadrature of the squared truncation error over one period.
    const int n = 200000;
    double quad = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / n;
        const double d = psi(t) - psi_partial_sum(t, j_max);
        quad += d * d;
    }
    quad /= n;
    CHECK(quad == doctest::Approx(tail).epsilon(2e-2));
}

TEST_CASE("interval indicator examples for alpha = 2") {
    const AlphaValue two = AlphaValue::integer(2);
    CHECK(indicator_alpha(0.3, two) == 0);
    CHECK(indicator_alpha(0.9, two) == 1);
    // identity at t = 0.3: 1/2 + psi(0.3) - psi(0.8) = 0.5 - 0.2 - 0.3 = 0
    CHECK(0.5 + psi(0.3) - psi(0.8) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("indicator identity holds off the lattice and fails at t = 0") {
    for (const AlphaValue& alpha : {kSqrt2, kPi}) {
        const BigFloat a = alpha.to_bigfloat();
        const BigFloat inv = 1 / a;
        Xoshiro256StarStar rng(stream_seed(42, 77));
        for (int i = 0; i < 20000; ++i) {
            const BigFloat t(rng.next_unit_open());
            const BigFloat identity = inv + psi(t) - psi(t + inv);
            const int ind = indicator_alpha(t, alpha);
            CHECK(abs(identity - ind).convert_to<double>() <= 1e-20);
        }
        // boundary case: the identity yields 0 at t = 0, the indicator 1
        const BigFloat zero(0);
        const BigFloat identity_at_zero = inv + psi(zero) - psi(inv);
        CHECK(abs(identity_at_zero).convert_to<double>() <= 1e-40);
        CHECK(indicator_alpha(zero, alpha) == 1);
    }
}

TEST_CASE("sawtooth stream matches direct evaluation") {
    for (const std::int64_t ell : {0, 1, -2}) {
        SawtoothStream s = SawtoothStream::over_alpha(kSqrt2, ell);
        const BigFloat a = kSqrt2.to_bigfloat();
        for (std::int64_t m = 1; m <= 500; ++m) {
            const double direct = psi(BigFloat(m + ell) / a).convert_to<double>();
            CHECK(s.next() == doctest::Approx(direct).epsilon(1e-14));
        }
    }
    // over_lambda: psi((m+ell) lambda)
    const AlphaValue lambda = AlphaValue::rational(1, 3);
    SawtoothStream s = SawtoothStream::over_lambda(lambda, 0);
    const double expected[] = {1.0 / 3 - 0.5, 2.0 / 3 - 0.5, -0.5};
    for (int rep = 0; rep < 9; ++rep) {
        CHECK(s.next() == doctest::Approx(expected[rep % 3]).epsilon(1e-30));
    }
}

TEST_CASE("sigma prefix examples") {
    const FunctionTable one = constant_table(10, 1.0);
    const auto sums = sigma_ell_prefix(one, AlphaValue::integer(2), 0, 4);
    // terms psi(m/2): 0, -1/2, 0, -1/2
    CHECK(sums[3].real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sums[0].real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sums[1].real() == doctest::Approx(-0.5).epsilon(1e-14));

    const FunctionTable zero = constant_table(10, 0.0);
    for (const auto& v : sigma_ell_prefix(zero, kSqrt2, 0, 10)) {
        CHECK(std::abs(v) == 0.0);
    }
}

TEST_CASE("sigma shift identity on a random table") {
    // Sigma^{(1)}(f, x) equals Sigma^{(0)}(g, x+1) for g = f shifted one slot
    // with g(1) = 0.
    const std::int64_t x = 400;
    Xoshiro256StarStar rng(stream_seed(42, 88));
    std::vector<std::int64_t> fv(static_cast<std::size_t>(x));
    for (auto& v : fv) v = rng.next_in(-5, 5);
    std::vector<std::int64_t> gv(static_cast<std::size_t>(x + 1), 0);
    for (std::int64_t m = 2; m <= x + 1; ++m) {
        gv[static_cast<std::size_t>(m - 1)] = fv[static_cast<std::size_t>(m - 2)];
    }
    const FunctionTable f = FunctionTable::from_integer_values("f", std::move(fv));
    const FunctionTable g = FunctionTable::from_integer_values("g", std::move(gv));
    const auto lhs = sigma_ell_prefix(f, kSqrt2, 1, x);
    const auto rhs = sigma_ell_prefix(g, kSqrt2, 0, x + 1);
    CHECK(lhs.back().real() == doctest::Approx(rhs.back().real()).epsilon(1e-12));
}

TEST_SUITE_END();
