#include "beatty/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace beatty {

std::string uniform_unit_literal(Xoshiro256StarStar& rng, int digits) {
    using boost::multiprecision::cpp_int;
    cpp_int u = 0;
    do {
        const std::uint64_t hi = rng.next();
        const std::uint64_t lo = rng.next();
        u = (cpp_int(hi) << 64) | lo;
    } while (u == 0);

    cpp_int p10 = 1;
    for (int i = 0; i < digits; ++i) p10 *= 10;

    // round(u * 10^digits / 2^128)
    cpp_int scaled = u * p10;
    cpp_int q = (scaled + (cpp_int(1) << 127)) >> 128;
    if (q >= p10) q = p10 - 1;  // keep the literal strictly below 1
    if (q == 0) q = 1;          // and strictly above 0

    std::string frac = q.str();
    std::string out = "0.";
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
    return out;
}

}  // namespace beatty
