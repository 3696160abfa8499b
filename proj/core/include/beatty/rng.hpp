#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace beatty {

// Deterministic randomness for the whole lab.
//
// Every random quantity in the library derives from a single 64-bit master
// seed through the fixed scheme below, so results are bit-reproducible
// across platforms and across reruns:
//
//   SplitMix64(s):  s += 0x9E3779B97F4A7C15
//                   z  = s
//                   z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                   z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                   output z ^ (z >> 31)
//
//   stream_seed(master, k)  = k-th output (0-based) of SplitMix64 seeded
//                             with master.  Evaluated in closed form, so
//                             stream k is O(1) to derive.
//
//   Xoshiro256StarStar(seed): state s[0..3] = four successive SplitMix64
//                             outputs seeded with `seed`; step function is
//                             the reference xoshiro256** update
//                             (rotl(s1*5,7)*9 output scrambler).
//
// Independent tasks (Monte Carlo samples, walk seeds) use generator
// Xoshiro256StarStar(stream_seed(master, task_index)).

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        return mix(state);
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// k-th output of SplitMix64(master), 0-based, in closed form.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k) {
    return SplitMix64::mix(master + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

class Xoshiro256StarStar {
  public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
    double next_unit_open() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform integer in [0, n) by rejection from the top 64-bit range.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Rademacher sign from the top bit: +1 if it is 0, -1 if it is 1.
    int next_sign() { return (next() >> 63) == 0 ? +1 : -1; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_;
};

// Decimal literal of a uniform sample from (0,1), with `digits` places after
// the decimal point.  The sample is U/2^128 for a 128-bit draw U (two
// successive 64-bit outputs, high word first, U = 0 rejected); the literal
// is U * 10^digits / 2^128 rounded to nearest.
std::string uniform_unit_literal(Xoshiro256StarStar& rng, int digits);

}  // namespace beatty
