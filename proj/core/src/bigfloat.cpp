#include "beatty/bigfloat.hpp"

#include <cmath>

#include "beatty/errors.hpp"

namespace beatty {

namespace {
int g_digits10 = 50;
}

void set_working_precision(int digits10) {
    if (digits10 < 2) {
        throw Error(ErrorCategory::ConfigError, "working precision must be >= 2 digits");
    }
    g_digits10 = digits10;
    BigFloat::default_precision(static_cast<unsigned>(digits10));
}

int working_precision() { return g_digits10; }

namespace {
// Applies the default before any BigFloat is constructed in this process.
const bool g_precision_initialized = [] {
    BigFloat::default_precision(50);
    return true;
}();
}  // namespace

BigFloat frac_part(const BigFloat& t) {
    BigFloat f = t - floor(t);
    // floor rounding at the representation boundary can leave f == 1.
    if (f >= 1) f -= 1;
    if (f < 0) f += 1;
    return f;
}

double frac_part(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f -= 1.0;
    if (f < 0.0) f += 1.0;
    return f;
}

}  // namespace beatty
