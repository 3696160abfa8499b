#include "beatty/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "beatty/beatty_set.hpp"
#include "beatty/errors.hpp"
#include "beatty/sawtooth.hpp"

namespace beatty {

namespace {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

cplx to_cplx(const cplxl& v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

double loglog_normaliser(double l2, std::int64_t x, double epsilon) {
    const double lx = std::log(static_cast<double>(x));
    return l2 * std::sqrt(lx) * std::pow(std::log(lx), 1.5 + epsilon);
}

// - sum over the below-threshold range 1 <= m <= floor(alpha)+beta-1 of
// f(m) times the sawtooth identity value
//
//   alpha^{-1} + psi((m-beta)/alpha) - psi((m-beta+1)/alpha),
//
// which is what the sigma streams reproduce term by term.  Away from the
// lattice points this equals the interval indicator of (-1/alpha, 0] mod 1;
// at m = beta (argument 0) the identity gives 0 where the indicator gives 1,
// and at m = beta-1 (argument -1/alpha) it gives 1 where the indicator gives
// 0.  Evaluating the identity directly keeps the closed form consistent with
// residual_def for every integer beta >= 0.
cplx residual_closed_sum(const FunctionTable& f, const AlphaValue& alpha,
                         std::int64_t beta, std::int64_t x) {
    const std::int64_t threshold = floor_linear(1, alpha) + beta - 1;
    const BigFloat alpha_big = alpha.to_bigfloat();
    const BigFloat inv_alpha = 1 / alpha_big;
    cplxl acc{0.0L, 0.0L};
    for (std::int64_t m = 1; m <= std::min(threshold, x); ++m) {
        const BigFloat t = BigFloat(m - beta) * inv_alpha;
        const BigFloat idval = inv_alpha + psi(t) - psi(t + inv_alpha);
        const cplx fm = f.value(m);
        const auto w = static_cast<long double>(idval.convert_to<double>());
        acc -= cplxl(fm.real() * w, fm.imag() * w);
    }
    return to_cplx(acc);
}

}  // namespace

cplx beatty_sum(const FunctionTable& f, const AlphaValue& alpha, const AlphaValue& beta,
                std::int64_t x) {
    if (x < 1 || x > f.size()) {
        throw Error(ErrorCategory::ConfigError, "beatty_sum needs 1 <= x <= f.N");
    }
    cplxl acc{0.0L, 0.0L};
    for (std::int64_t m = 1; m <= x; ++m) {
        if (beatty_member(m, alpha, beta)) {
            const cplx fm = f.value(m);
            acc += cplxl(fm.real(), fm.imag());
        }
    }
    return to_cplx(acc);
}

cplx plain_sum(const FunctionTable& f, std::int64_t x) { return f.prefix_sum(x); }

std::vector<DecompositionReport> decomposition_reports(
    const FunctionTable& f, const AlphaValue& alpha, std::int64_t beta,
    const std::vector<std::int64_t>& checkpoints, double epsilon) {
    if (alpha.kind() == AlphaValue::Kind::Rational) {
        throw Error(ErrorCategory::RationalAlpha,
                    "the exact decomposition requires an irrational-representative alpha");
    }
    if (beta < 0) {
        throw Error(ErrorCategory::BetaNotInteger, "beta must be a non-negative integer");
    }
    if (sign_linear(1, alpha, nullptr, 1) <= 0) {
        throw Error(ErrorCategory::ConfigError, "alpha must be > 1");
    }
    if (checkpoints.empty() || checkpoints.front() < 8 ||
        !std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        checkpoints.back() > f.size()) {
        throw Error(ErrorCategory::ConfigError,
                    "checkpoints must be ascending, >= 8 and within the table");
    }

    const AlphaValue beta_value = AlphaValue::integer(beta);
    const std::int64_t x_max = checkpoints.back();
    const long double inv_alpha = (1 / alpha.to_bigfloat()).convert_to<long double>();

    SawtoothStream stream0 = SawtoothStream::over_alpha(alpha, -beta);
    SawtoothStream stream1 = SawtoothStream::over_alpha(alpha, 1 - beta);

    std::vector<DecompositionReport> out;
    out.reserve(checkpoints.size());
    cplxl s_beatty{0.0L, 0.0L}, s_plain{0.0L, 0.0L}, sigma0{0.0L, 0.0L},
        sigma1{0.0L, 0.0L};
    std::size_t next_checkpoint = 0;

    for (std::int64_t m = 1; m <= x_max; ++m) {
        const cplx fm = f.value(m);
        const cplxl fl(fm.real(), fm.imag());
        s_plain += fl;
        if (beatty_member(m, alpha, beta_value)) s_beatty += fl;
        sigma0 += fl * static_cast<long double>(stream0.next());
        sigma1 += fl * static_cast<long double>(stream1.next());

        while (next_checkpoint < checkpoints.size() &&
               checkpoints[next_checkpoint] == m) {
            DecompositionReport r;
            r.alpha = alpha;
            r.beta = beta_value;
            r.x = m;
            r.S_beatty = to_cplx(s_beatty);
            r.S_plain = to_cplx(s_plain);
            r.sigma0 = to_cplx(sigma0);
            r.sigma1 = to_cplx(sigma1);
            r.error = to_cplx(s_beatty - inv_alpha * s_plain);
            r.residual_def = to_cplx(s_beatty - inv_alpha * s_plain - sigma0 + sigma1);
            r.residual_closed = residual_closed_sum(f, alpha, beta, m);
            r.l2_norm = f.l2_norm(m);
            const double denom = loglog_normaliser(r.l2_norm, m, epsilon);
            r.normalized_error = denom > 0.0 ? std::abs(r.error) / denom : 0.0;
            const double alpha_plus_beta = alpha.to_double() + static_cast<double>(beta);
            const std::int64_t m_arg =
                std::min(f.size(), static_cast<std::int64_t>(std::ceil(alpha_plus_beta)));
            r.residual_bound = alpha_plus_beta * f.sup_proxy(m_arg);
            out.push_back(std::move(r));
            ++next_checkpoint;
        }
    }
    return out;
}

DecompositionReport decomposition_report(const FunctionTable& f, const AlphaValue& alpha,
                                         std::int64_t beta, std::int64_t x,
                                         double epsilon) {
    return decomposition_reports(f, alpha, beta, {x}, epsilon).front();
}

std::vector<ErrorCurveRow> error_curve(const FunctionTable& f, const AlphaValue& alpha,
                                       const AlphaValue& beta,
                                       const std::vector<std::int64_t>& checkpoints,
                                       double epsilon) {
    if (checkpoints.empty() || checkpoints.front() < 1 ||
        !std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        checkpoints.back() > f.size()) {
        throw Error(ErrorCategory::ConfigError,
                    "checkpoints must be ascending, >= 1 and within the table");
    }
    const std::int64_t x_max = checkpoints.back();
    const long double inv_alpha = (1 / alpha.to_bigfloat()).convert_to<long double>();

    std::vector<ErrorCurveRow> out;
    out.reserve(checkpoints.size());
    cplxl s_beatty{0.0L, 0.0L}, s_plain{0.0L, 0.0L};
    std::size_t next_checkpoint = 0;
    for (std::int64_t m = 1; m <= x_max; ++m) {
        const cplx fm = f.value(m);
        const cplxl fl(fm.real(), fm.imag());
        s_plain += fl;
        if (beatty_member(m, alpha, beta)) s_beatty += fl;
        while (next_checkpoint < checkpoints.size() &&
               checkpoints[next_checkpoint] == m) {
            ErrorCurveRow row;
            row.x = m;
            row.S_beatty = to_cplx(s_beatty);
            row.S_plain = to_cplx(s_plain);
            row.error = to_cplx(s_beatty - inv_alpha * s_plain);
            row.l2_norm = f.l2_norm(m);
            if (m >= 8) {
                const double denom = loglog_normaliser(row.l2_norm, m, epsilon);
                row.normalized_error = denom > 0.0 ? std::abs(row.error) / denom : 0.0;
            }
            row.abs_normalized_error =
                std::abs(row.error) /
                (std::pow(static_cast<double>(m), 0.75) * f.sup_proxy(m));
            out.push_back(row);
            ++next_checkpoint;
        }
    }
    return out;
}

}  // namespace beatty
