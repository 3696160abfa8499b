#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "beatty/alpha_value.hpp"
#include "beatty/function_table.hpp"

namespace beatty {

// Difference weights paired with the truncated sawtooth coefficients in the
// trigonometric polynomial Q(f,x):
//
//   g(1)   =  f(1)
//   g(m)   = -f(m-1) + f(m)     for 2 <= m <= x
//   g(x+1) = -f(x)
std::vector<std::complex<double>> g_coeffs(const FunctionTable& f, std::int64_t x);

// Truncated sawtooth Fourier coefficient: -1/(2 pi i j) for 1 <= |j| <=
// floor(sqrt(x)), zero beyond the truncation.
std::complex<double> c_truncated(std::int64_t j, std::int64_t x);

// Q(f,x)(alpha) = sum_{1<=|k|<=K} a_k e(k/alpha) with
// a_k = sum_{m j = k, m <= x+1, |j| <= sqrt(x)} g(m) c(j) and
// K = (x+1) floor(sqrt(x)).
struct SpectralEnergy {
    std::int64_t x = 0;
    std::int64_t j_max = 0;  // floor(sqrt(x))
    std::int64_t k_max = 0;  // (x+1) * j_max
    // Nonzero a_k sorted by k (both signs present for real-valued f).
    std::vector<std::pair<std::int64_t, std::complex<double>>> coeffs;
    double energy = 0.0;  // sum_k |a_k|^2
};

SpectralEnergy q_coefficients(const FunctionTable& f, std::int64_t x);

// Pointwise evaluation sum_k a_k e(k/alpha), arguments reduced mod 1 at
// working precision.
std::complex<double> q_eval(const SpectralEnergy& energy, const AlphaValue& alpha);

// Average of |Q|^2 over the uniform grid lambda = i/N.  The grid rule is an
// exact quadrature for trigonometric polynomials of degree <= K once
// N > 2K, so the result must reproduce `energy.energy` (Parseval).
double q_l2_quadrature(const SpectralEnergy& energy, std::int64_t n_grid);

// energy / (x (log x)^3 M(f,x)^2), the ABS energy normalisation.
double abs_energy_ratio(const FunctionTable& f, std::int64_t x);
double abs_energy_ratio_from(double energy, std::int64_t x, double sup_proxy);

// max_{1<=y<=X} | sum_{m<=y} f(m) psi((m+ell) lambda) | in one streaming pass.
double maximal_sigma(const FunctionTable& f, const AlphaValue& lambda, std::int64_t x_max,
                     std::int64_t ell);

struct MaximalEstimate {
    std::int64_t x_max = 0;
    std::int64_t ell = 0;
    int n_samples = 0;
    std::uint64_t seed = 0;
    double integral_estimate = 0.0;  // Monte Carlo mean of the squared maximum
    double standard_error = 0.0;
    double l2_sq = 0.0;      // ||f|_X||_2^2
    double loglog_sq = 0.0;  // (log log X)^2
    double normalized_ratio = 0.0;  // integral / (loglog_sq * l2_sq)
};

// Monte Carlo estimate of the maximal-operator L2 integral over lambda in
// (0,1); sample i uses the decimal lambda drawn from
// Xoshiro256StarStar(stream_seed(seed, i)) at working precision.
MaximalEstimate mc_maximal_l2(const FunctionTable& f, std::int64_t x_max,
                              std::int64_t ell, int n_samples, std::uint64_t seed);

struct CarlesonCheck {
    std::int64_t y_max = 0;
    int n_samples = 0;
    std::uint64_t seed = 0;
    double lhs_estimate = 0.0;  // MC estimate of the maximal partial-sum L2 integral
    double standard_error = 0.0;
    double rhs = 0.0;  // sum |c_k|^2
};

// Coefficients for k = 1..Y in c_pos and k = -1..-Y in c_neg.
CarlesonCheck carleson_hunt_check(const std::vector<std::complex<double>>& c_pos,
                                  const std::vector<std::complex<double>>& c_neg,
                                  int n_samples, std::uint64_t seed);

}  // namespace beatty
