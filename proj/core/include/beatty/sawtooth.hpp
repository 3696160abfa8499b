#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "beatty/alpha_value.hpp"
#include "beatty/bigfloat.hpp"
#include "beatty/function_table.hpp"

namespace beatty {

// psi(t) = t - floor(t) - 1/2, the mean-zero sawtooth; values in [-1/2, 1/2).
double psi(double t);
BigFloat psi(const BigFloat& t);

// Truncated Fourier series of psi: the coefficients are c_0 = 0 and
// c_j = -1/(2 pi i j), so pairing +-j gives the real form
//   psi_J(t) = - sum_{j=1..J} sin(2 pi j t) / (pi j).
double psi_partial_sum(double t, std::int64_t j_max);

// Characteristic function of (-1/alpha, 0] mod 1, i.e. of
// frac(t) in (1 - 1/alpha, 1) union {0}; requires alpha > 1.
int indicator_alpha(const BigFloat& t, const AlphaValue& alpha);
int indicator_alpha(double t, const AlphaValue& alpha);

// Streaming evaluation of psi((m + ell) * lambda) for m = 1, 2, ...: the
// fractional part advances by one working-precision addition per step, so a
// pass over m <= 1e8 keeps >= 30 correct digits at the default precision.
class SawtoothStream {
  public:
    // Terms psi((m + ell)/alpha).
    static SawtoothStream over_alpha(const AlphaValue& alpha, std::int64_t ell);
    // Terms psi((m + ell) * lambda).
    static SawtoothStream over_lambda(const AlphaValue& lambda, std::int64_t ell);

    // psi value at the current m (starting from m = 1), then advance.
    double next();

  private:
    SawtoothStream(BigFloat lambda, std::int64_t ell);

    BigFloat u_;     // frac((m + ell) * lambda) for the current m
    BigFloat step_;  // frac(lambda)
};

// Prefix sums Sigma_alpha^{(ell)}(f, x) = sum_{m<=x} f(m) psi((m+ell)/alpha)
// for x = 1..X in one pass.
std::vector<std::complex<double>> sigma_ell_prefix(const FunctionTable& f,
                                                   const AlphaValue& alpha,
                                                   std::int64_t ell, std::int64_t x_max);

}  // namespace beatty
