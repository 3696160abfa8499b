#include "beatty/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "beatty/bigfloat.hpp"
#include "beatty/errors.hpp"
#include "beatty/rng.hpp"
#include "beatty/sawtooth.hpp"

namespace beatty {

namespace {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

std::int64_t isqrt_floor(std::int64_t x) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

double abs_sq(const cplxl& v) {
    return static_cast<double>(v.real() * v.real() + v.imag() * v.imag());
}

}  // namespace

std::vector<cplx> g_coeffs(const FunctionTable& f, std::int64_t x) {
    if (x < 1 || x > f.size()) {
        throw Error(ErrorCategory::ConfigError, "g_coeffs needs 1 <= x <= f.N");
    }
    std::vector<cplx> g(static_cast<std::size_t>(x + 1));
    g[0] = f.value(1);
    for (std::int64_t m = 2; m <= x; ++m) {
        g[static_cast<std::size_t>(m - 1)] = f.value(m) - f.value(m - 1);
    }
    g[static_cast<std::size_t>(x)] = -f.value(x);
    return g;
}

cplx c_truncated(std::int64_t j, std::int64_t x) {
    if (j == 0) throw Error(ErrorCategory::ConfigError, "c_truncated needs j != 0");
    if (std::abs(j) > isqrt_floor(x)) return {0.0, 0.0};
    // -1/(2 pi i j) = i/(2 pi j)
    return {0.0, 1.0 / (2.0 * M_PI * static_cast<double>(j))};
}

SpectralEnergy q_coefficients(const FunctionTable& f, std::int64_t x) {
    if (x < 1 || x > f.size()) {
        throw Error(ErrorCategory::ConfigError, "q_coefficients needs 1 <= x <= f.N");
    }
    const std::int64_t j_max = isqrt_floor(x);
    if ((x + 1) * j_max > 500'000'000) {
        throw Error(ErrorCategory::CapacityExceeded,
                    "q_coefficients degree (x+1)*sqrt(x) beyond budget");
    }

    const std::vector<cplx> g = g_coeffs(f, x);
    std::unordered_map<std::int64_t, cplx> a;
    a.reserve(g.size() * static_cast<std::size_t>(j_max));
    for (std::int64_t m = 1; m <= x + 1; ++m) {
        const cplx gm = g[static_cast<std::size_t>(m - 1)];
        if (gm == cplx{0.0, 0.0}) continue;
        for (std::int64_t j = 1; j <= j_max; ++j) {
            const cplx c{0.0, 1.0 / (2.0 * M_PI * static_cast<double>(j))};
            a[m * j] += gm * c;
            a[-m * j] += gm * conj(c);
        }
    }

    SpectralEnergy e;
    e.x = x;
    e.j_max = j_max;
    e.k_max = (x + 1) * j_max;
    e.coeffs.assign(a.begin(), a.end());
    std::sort(e.coeffs.begin(), e.coeffs.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    long double energy = 0.0L;
    for (const auto& [k, ak] : e.coeffs) {
        energy += static_cast<long double>(ak.real()) * ak.real() +
                  static_cast<long double>(ak.imag()) * ak.imag();
    }
    e.energy = static_cast<double>(energy);
    return e;
}

cplx q_eval(const SpectralEnergy& energy, const AlphaValue& alpha) {
    const BigFloat inv_alpha = 1 / alpha.to_bigfloat();
    cplxl acc{0.0L, 0.0L};
    BigFloat arg;
    for (const auto& [k, ak] : energy.coeffs) {
        arg = frac_part(k * inv_alpha);
        const double theta = 2.0 * M_PI * arg.convert_to<double>();
        const cplx term = ak * cplx{std::cos(theta), std::sin(theta)};
        acc += cplxl(term.real(), term.imag());
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double q_l2_quadrature(const SpectralEnergy& energy, std::int64_t n_grid) {
    if (n_grid <= 2 * energy.k_max + 1) {
        throw Error(ErrorCategory::GridTooCoarse,
                    "need N_grid > 2K+1 for exact trigonometric quadrature");
    }
    // Roots of unity so that e(k i/N) = table[(k i) mod N].
    std::vector<cplx> rot(static_cast<std::size_t>(n_grid));
    for (std::int64_t t = 0; t < n_grid; ++t) {
        const double theta =
            2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n_grid);
        rot[static_cast<std::size_t>(t)] = {std::cos(theta), std::sin(theta)};
    }
    std::vector<std::int64_t> k_mod(energy.coeffs.size());
    for (std::size_t i = 0; i < energy.coeffs.size(); ++i) {
        std::int64_t km = energy.coeffs[i].first % n_grid;
        if (km < 0) km += n_grid;
        k_mod[i] = km;
    }

    long double acc = 0.0L;
    for (std::int64_t i = 0; i < n_grid; ++i) {
        cplx q{0.0, 0.0};
        for (std::size_t idx = 0; idx < energy.coeffs.size(); ++idx) {
            q += energy.coeffs[idx].second *
                 rot[static_cast<std::size_t>((k_mod[idx] * i) % n_grid)];
        }
        acc += static_cast<long double>(q.real()) * q.real() +
               static_cast<long double>(q.imag()) * q.imag();
    }
    return static_cast<double>(acc / static_cast<long double>(n_grid));
}

double abs_energy_ratio_from(double energy, std::int64_t x, double sup_proxy) {
    const double lx = std::log(static_cast<double>(x));
    return energy / (static_cast<double>(x) * lx * lx * lx * sup_proxy * sup_proxy);
}

double abs_energy_ratio(const FunctionTable& f, std::int64_t x) {
    if (x < 8) throw Error(ErrorCategory::ConfigError, "abs_energy_ratio needs x >= 8");
    return abs_energy_ratio_from(q_coefficients(f, x).energy, x, f.sup_proxy(x));
}

double maximal_sigma(const FunctionTable& f, const AlphaValue& lambda,
                     std::int64_t x_max, std::int64_t ell) {
    if (x_max < 1 || x_max > f.size()) {
        throw Error(ErrorCategory::ConfigError, "maximal_sigma needs 1 <= X <= f.N");
    }
    SawtoothStream stream = SawtoothStream::over_lambda(lambda, ell);
    cplxl acc{0.0L, 0.0L};
    double best = 0.0;
    for (std::int64_t m = 1; m <= x_max; ++m) {
        const double p = stream.next();
        const cplx fm = f.value(m);
        acc += cplxl(fm.real() * p, fm.imag() * p);
        best = std::max(best, abs_sq(acc));
    }
    return std::sqrt(best);
}

MaximalEstimate mc_maximal_l2(const FunctionTable& f, std::int64_t x_max,
                              std::int64_t ell, int n_samples, std::uint64_t seed) {
    if (x_max < 8) throw Error(ErrorCategory::ConfigError, "mc_maximal_l2 needs X >= 8");
    if (n_samples < 2) {
        throw Error(ErrorCategory::ConfigError, "mc_maximal_l2 needs n_samples >= 2");
    }
    const int digits = working_precision();
    long double sum = 0.0L, sum_sq = 0.0L;
    for (int i = 0; i < n_samples; ++i) {
        Xoshiro256StarStar rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        const AlphaValue lambda =
            AlphaValue::decimal(uniform_unit_literal(rng, digits), std::max(30, digits));
        const double m = maximal_sigma(f, lambda, x_max, ell);
        const long double msq = static_cast<long double>(m) * m;
        sum += msq;
        sum_sq += msq * msq;
    }
    MaximalEstimate est;
    est.x_max = x_max;
    est.ell = ell;
    est.n_samples = n_samples;
    est.seed = seed;
    const long double n = n_samples;
    est.integral_estimate = static_cast<double>(sum / n);
    const long double var = std::max(0.0L, (sum_sq - sum * sum / n) / (n - 1));
    est.standard_error = static_cast<double>(std::sqrt(var / n));
    est.l2_sq = f.prefix_sq(x_max);
    const double llx = std::log(std::log(static_cast<double>(x_max)));
    est.loglog_sq = llx * llx;
    const double denom = est.loglog_sq * est.l2_sq;
    est.normalized_ratio = denom > 0.0 ? est.integral_estimate / denom : 0.0;
    return est;
}

CarlesonCheck carleson_hunt_check(const std::vector<cplx>& c_pos,
                                  const std::vector<cplx>& c_neg, int n_samples,
                                  std::uint64_t seed) {
    if (c_pos.size() != c_neg.size() || c_pos.empty()) {
        throw Error(ErrorCategory::ConfigError,
                    "carleson_hunt_check needs matching coefficient arrays, Y >= 1");
    }
    if (n_samples < 2) {
        throw Error(ErrorCategory::ConfigError, "carleson_hunt_check needs n >= 2");
    }
    const std::size_t y_max = c_pos.size();

    long double rhs = 0.0L;
    for (std::size_t i = 0; i < y_max; ++i) {
        rhs += static_cast<long double>(std::norm(c_pos[i])) + std::norm(c_neg[i]);
    }

    long double sum = 0.0L, sum_sq = 0.0L;
    for (int s = 0; s < n_samples; ++s) {
        Xoshiro256StarStar rng(stream_seed(seed, static_cast<std::uint64_t>(s)));
        const double lambda = rng.next_unit_open();
        const double theta = 2.0 * M_PI * lambda;
        const cplx w{std::cos(theta), std::sin(theta)};
        cplx zp{1.0, 0.0}, zm{1.0, 0.0};
        cplxl partial{0.0L, 0.0L};
        double best = 0.0;
        for (std::size_t y = 0; y < y_max; ++y) {
            zp *= w;
            zm *= conj(w);
            const cplx inc = c_pos[y] * zp + c_neg[y] * zm;
            partial += cplxl(inc.real(), inc.imag());
            best = std::max(best, abs_sq(partial));
        }
        sum += best;
        sum_sq += static_cast<long double>(best) * best;
    }

    CarlesonCheck chk;
    chk.y_max = static_cast<std::int64_t>(y_max);
    chk.n_samples = n_samples;
    chk.seed = seed;
    const long double n = n_samples;
    chk.lhs_estimate = static_cast<double>(sum / n);
    const long double var = std::max(0.0L, (sum_sq - sum * sum / n) / (n - 1));
    chk.standard_error = static_cast<double>(std::sqrt(var / n));
    chk.rhs = static_cast<double>(rhs);
    return chk;
}

}  // namespace beatty
