#include "beatty/sawtooth.hpp"

#include <cmath>

#include "beatty/errors.hpp"

namespace beatty {

double psi(double t) { return frac_part(t) - 0.5; }

BigFloat psi(const BigFloat& t) { return frac_part(t) - BigFloat(0.5); }

double psi_partial_sum(double t, std::int64_t j_max) {
    if (j_max < 1) throw Error(ErrorCategory::ConfigError, "psi_partial_sum needs J >= 1");
    double acc = 0.0;
    for (std::int64_t j = 1; j <= j_max; ++j) {
        // reduce j*t mod 1 before the sine for large j
        const double arg = frac_part(static_cast<double>(j) * t);
        acc -= std::sin(2.0 * M_PI * arg) / (M_PI * static_cast<double>(j));
    }
    return acc;
}

int indicator_alpha(const BigFloat& t, const AlphaValue& alpha) {
    if (sign_linear(1, alpha, nullptr, 1) <= 0) {
        throw Error(ErrorCategory::ConfigError, "indicator_alpha requires alpha > 1");
    }
    const BigFloat ft = frac_part(t);
    if (ft == 0) return 1;
    return ft > 1 - 1 / alpha.to_bigfloat() ? 1 : 0;
}

int indicator_alpha(double t, const AlphaValue& alpha) {
    return indicator_alpha(BigFloat(t), alpha);
}

SawtoothStream::SawtoothStream(BigFloat lambda, std::int64_t ell)
    : u_(frac_part(BigFloat((ell + 1)) * lambda)), step_(frac_part(lambda)) {}

SawtoothStream SawtoothStream::over_alpha(const AlphaValue& alpha, std::int64_t ell) {
    const BigFloat a = alpha.to_bigfloat();
    if (a <= 0) throw Error(ErrorCategory::ConfigError, "alpha must be positive");
    return SawtoothStream(1 / a, ell);
}

SawtoothStream SawtoothStream::over_lambda(const AlphaValue& lambda, std::int64_t ell) {
    return SawtoothStream(lambda.to_bigfloat(), ell);
}

double SawtoothStream::next() {
    const double value = u_.convert_to<double>() - 0.5;
    u_ += step_;
    if (u_ >= 1) u_ -= 1;
    return value;
}

std::vector<std::complex<double>> sigma_ell_prefix(const FunctionTable& f,
                                                   const AlphaValue& alpha,
                                                   std::int64_t ell, std::int64_t x_max) {
    if (x_max < 1 || x_max > f.size()) {
        throw Error(ErrorCategory::ConfigError, "sigma_ell_prefix needs 1 <= X <= f.N");
    }
    std::vector<std::complex<double>> out(static_cast<std::size_t>(x_max));
    SawtoothStream stream = SawtoothStream::over_alpha(alpha, ell);
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::int64_t m = 1; m <= x_max; ++m) {
        const double p = stream.next();
        const std::complex<double> fm = f.value(m);
        acc += std::complex<long double>(fm.real() * p, fm.imag() * p);
        out[static_cast<std::size_t>(m - 1)] = {static_cast<double>(acc.real()),
                                                static_cast<double>(acc.imag())};
    }
    return out;
}

}  // namespace beatty
