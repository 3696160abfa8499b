#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "beatty/alpha_value.hpp"
#include "beatty/function_table.hpp"

namespace beatty {

// Exact decomposition of the Beatty-restricted summatory function
//
//   S_{alpha,beta}(f,x) = alpha^{-1} S(f,x) + sigma0 - sigma1 + residual
//
// with sigma0 = Sigma_alpha^{(-beta)}(f,x), sigma1 = Sigma_alpha^{(1-beta)}(f,x).
// The residual is computed two ways and both are reported:
//
//   residual_def    = S_beatty - alpha^{-1} S_plain - sigma0 + sigma1
//   residual_closed = - sum over 1 <= m <= min(x, floor(alpha)+beta-1) of
//                     f(m) * (alpha^{-1} + psi((m-beta)/alpha)
//                                        - psi((m-beta+1)/alpha))
//
// The closed sum evaluates the sawtooth identity value, which matches the
// interval indicator of (-1/alpha, 0] mod 1 except at the two lattice
// arguments m = beta and m = beta-1 (where the identity yields 0 and 1
// respectively).  No m below the threshold is a Beatty element, so the two
// residual routes agree to working precision for irrational alpha and
// integer beta.
struct DecompositionReport {
    AlphaValue alpha;
    AlphaValue beta;
    std::int64_t x = 0;
    std::complex<double> S_beatty{0.0, 0.0};
    std::complex<double> S_plain{0.0, 0.0};
    std::complex<double> sigma0{0.0, 0.0};
    std::complex<double> sigma1{0.0, 0.0};
    std::complex<double> residual_def{0.0, 0.0};
    std::complex<double> residual_closed{0.0, 0.0};
    std::complex<double> error{0.0, 0.0};  // S_beatty - alpha^{-1} S_plain
    double l2_norm = 0.0;                  // ||f|_x||_2
    double normalized_error = 0.0;  // |error| / (l2 (log x)^{1/2} (log log x)^{3/2+eps})
    double residual_bound = 0.0;    // (alpha+beta) * M(f, ceil(alpha+beta))
};

// S_{alpha,beta}(f,x) via per-m membership tests (beatty_enumerate serves as
// the independent oracle in the tests).
std::complex<double> beatty_sum(const FunctionTable& f, const AlphaValue& alpha,
                                const AlphaValue& beta, std::int64_t x);
// S(f,x).
std::complex<double> plain_sum(const FunctionTable& f, std::int64_t x);

// Reports at the given ascending checkpoints in a single streaming pass.
// Requires irrational-representative alpha > 1 (rational alpha is rejected:
// lattice hits break the sawtooth identity), integer beta >= 0, and
// checkpoints with x >= 8.
std::vector<DecompositionReport> decomposition_reports(
    const FunctionTable& f, const AlphaValue& alpha, std::int64_t beta,
    const std::vector<std::int64_t>& checkpoints, double epsilon = 0.0);

DecompositionReport decomposition_report(const FunctionTable& f, const AlphaValue& alpha,
                                         std::int64_t beta, std::int64_t x,
                                         double epsilon = 0.0);

// One error-curve row: the raw identity error plus both normalisations
// (the l2/loglog one and the x^{3/4} M(f,x) one).
struct ErrorCurveRow {
    std::int64_t x = 0;
    std::complex<double> S_beatty{0.0, 0.0};
    std::complex<double> S_plain{0.0, 0.0};
    std::complex<double> error{0.0, 0.0};
    double l2_norm = 0.0;
    std::optional<double> normalized_error;  // absent for x < 8
    double abs_normalized_error = 0.0;       // |error| / (x^{3/4} M(f,x))
};

// Rows at the given ascending checkpoints; any alpha >= 1 and real beta >= 0
// are allowed here since only membership sums are involved.
std::vector<ErrorCurveRow> error_curve(const FunctionTable& f, const AlphaValue& alpha,
                                       const AlphaValue& beta,
                                       const std::vector<std::int64_t>& checkpoints,
                                       double epsilon = 0.0);

}  // namespace beatty
