#pragma once

#include <cstdint>
#include <vector>

#include "beatty/alpha_value.hpp"

namespace beatty {

// Rademacher-weighted sawtooth walk: increments
//   X_m = f_m * (psi(m lambda) - psi((m+1) lambda)),   f_m = +-1,
// partial sums S_x, exact variance prefix s_x^2 = sum (psi(m l)-psi((m+1) l))^2,
// and the iterated-logarithm statistic S_x / sqrt(2 s_x^2 log log s_x^2).
//
// Sign sequences come from Xoshiro256StarStar(seed) (one next_sign() per m),
// matching rademacher_table(N, seed) element for element.

// psi(m lambda) - psi((m+1) lambda), in [-1, 1].
double increment(std::int64_t m, const AlphaValue& lambda);

// Exact prefix sum of squared increments.
double s_squared(const AlphaValue& lambda, std::int64_t x);

// Increment table for m = 1..x_max (one working-precision pass).
std::vector<double> sawtooth_increments(const AlphaValue& lambda, std::int64_t x_max);

struct WalkTrajectory {
    AlphaValue lambda;
    std::uint64_t seed = 0;
    std::int64_t x_max = 0;
    std::vector<std::int64_t> checkpoints;
    std::vector<double> S;
    std::vector<double> s_sq;
    std::vector<double> lil_stat;  // NaN where s_sq < 8
};

// Walk with signs drawn from Xoshiro256StarStar(seed).  Empty `checkpoints`
// selects the default geometric x1.1 grid up to x_max.
WalkTrajectory walk(const AlphaValue& lambda, std::int64_t x_max, std::uint64_t seed,
                    std::vector<std::int64_t> checkpoints = {});

// Same walk over precomputed increments and an explicit sign sequence
// (signs[m-1] in {+1,-1}); used for multi-seed sweeps and symmetry tests.
WalkTrajectory walk_from(const AlphaValue& lambda, const std::vector<double>& increments,
                         const std::vector<int>& signs, std::uint64_t seed_label,
                         std::vector<std::int64_t> checkpoints);

std::vector<int> rademacher_signs(std::int64_t x_max, std::uint64_t seed);

struct WitnessResult {
    std::int64_t x_star = 0;
    double witness = 0.0;  // max over checkpoints >= 16 of |S_x| / sqrt(x log log x)
};

WitnessResult witness_from(const WalkTrajectory& trajectory);
WitnessResult lower_bound_witness(const AlphaValue& lambda, std::int64_t x_max,
                                  std::uint64_t seed);

}  // namespace beatty
