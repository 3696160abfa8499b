#pragma once

#include <cstdint>
#include <vector>

#include "beatty/alpha_value.hpp"
#include "beatty/rng.hpp"

namespace beatty {

// The window { floor(n*alpha + beta) : n >= 1 } intersected with [1, x],
// cached as a strictly increasing list.
struct BeattyWindow {
    AlphaValue alpha;
    AlphaValue beta;
    std::int64_t x = 0;
    std::vector<std::int64_t> elements;

    bool contains(std::int64_t m) const;
    // Differences of consecutive elements (size elements.size()-1).
    std::vector<std::int64_t> gaps() const;
};

// Exact membership test for m in B(alpha, beta), alpha >= 1, beta >= 0.
// Above the threshold m > alpha + beta - 1 this inverts the floor: the only
// candidate index is the least n with n*alpha + beta >= m, and m is a member
// iff additionally n*alpha + beta < m + 1 and n >= 1.  At or below the
// threshold it falls back to a bounded direct search over n, which is still
// exact.
bool beatty_member(std::int64_t m, const AlphaValue& alpha, const AlphaValue& beta);
bool beatty_member(std::int64_t m, const AlphaValue& alpha);

// Exact enumeration of B(alpha, beta) up to x by evaluating each floor;
// independent of beatty_member and usable as its oracle.
BeattyWindow beatty_enumerate(const AlphaValue& alpha, const AlphaValue& beta,
                              std::int64_t x);
BeattyWindow beatty_enumerate(const AlphaValue& alpha, std::int64_t x);

// Random quadratic irrational (p + q*sqrt(d))/r in the open interval
// (lo, hi), with d a non-square in [2, 1000], q and r in [1, 40], and p the
// integer range implied by the bounds.  Candidates are verified against the
// bounds with exact arithmetic, so the draw is reproducible bit-for-bit from
// the stream state.
AlphaValue sample_alpha(Xoshiro256StarStar& rng, double lo, double hi);

}  // namespace beatty
