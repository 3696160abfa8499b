#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace beatty {

// Working-precision real type for sawtooth streams, frac reductions and
// report arithmetic.  Precision is set process-wide in decimal digits
// (default 50); exact Beatty membership never depends on it.
using BigFloat = boost::multiprecision::mpfr_float;

void set_working_precision(int digits10);
int working_precision();

// t - floor(t), in [0, 1).
BigFloat frac_part(const BigFloat& t);
double frac_part(double t);

}  // namespace beatty
