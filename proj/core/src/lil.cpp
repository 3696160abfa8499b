#include "beatty/lil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "beatty/checkpoints.hpp"
#include "beatty/errors.hpp"
#include "beatty/rng.hpp"
#include "beatty/sawtooth.hpp"

namespace beatty {

namespace {

void require_unit_interval(const AlphaValue& lambda) {
    if (sign_linear(1, lambda, nullptr, 0) <= 0 ||
        sign_linear(1, lambda, nullptr, 1) >= 0) {
        throw Error(ErrorCategory::ConfigError, "lambda must lie in the open interval (0,1)");
    }
}

}  // namespace

double increment(std::int64_t m, const AlphaValue& lambda) {
    require_unit_interval(lambda);
    const BigFloat l = lambda.to_bigfloat();
    const BigFloat diff = frac_part(m * l) - frac_part((m + 1) * l);
    return diff.convert_to<double>();
}

std::vector<double> sawtooth_increments(const AlphaValue& lambda, std::int64_t x_max) {
    require_unit_interval(lambda);
    if (x_max < 1) throw Error(ErrorCategory::ConfigError, "x_max must be >= 1");
    SawtoothStream stream = SawtoothStream::over_lambda(lambda, 0);
    std::vector<double> inc(static_cast<std::size_t>(x_max));
    double prev = stream.next();  // psi(1 lambda)
    for (std::int64_t m = 1; m <= x_max; ++m) {
        const double next_psi = stream.next();  // psi((m+1) lambda)
        inc[static_cast<std::size_t>(m - 1)] = prev - next_psi;
        prev = next_psi;
    }
    return inc;
}

double s_squared(const AlphaValue& lambda, std::int64_t x) {
    require_unit_interval(lambda);
    if (x < 1) throw Error(ErrorCategory::ConfigError, "x must be >= 1");
    SawtoothStream stream = SawtoothStream::over_lambda(lambda, 0);
    long double acc = 0.0L;
    double prev = stream.next();
    for (std::int64_t m = 1; m <= x; ++m) {
        const double next_psi = stream.next();
        const double d = prev - next_psi;
        acc += static_cast<long double>(d) * d;
        prev = next_psi;
    }
    return static_cast<double>(acc);
}

std::vector<int> rademacher_signs(std::int64_t x_max, std::uint64_t seed) {
    Xoshiro256StarStar rng(seed);
    std::vector<int> signs(static_cast<std::size_t>(x_max));
    for (auto& s : signs) s = rng.next_sign();
    return signs;
}

WalkTrajectory walk_from(const AlphaValue& lambda, const std::vector<double>& increments,
                         const std::vector<int>& signs, std::uint64_t seed_label,
                         std::vector<std::int64_t> checkpoints) {
    if (increments.size() != signs.size() || increments.empty()) {
        throw Error(ErrorCategory::ConfigError,
                    "walk_from needs matching non-empty increments and signs");
    }
    const auto x_max = static_cast<std::int64_t>(increments.size());
    if (checkpoints.empty()) {
        checkpoints = geometric_checkpoints(std::min<std::int64_t>(8, x_max), x_max);
    }
    if (checkpoints.front() < 1 || checkpoints.back() > x_max ||
        !std::is_sorted(checkpoints.begin(), checkpoints.end())) {
        throw Error(ErrorCategory::ConfigError,
                    "checkpoints must be ascending and within [1, x_max]");
    }

    WalkTrajectory t;
    t.lambda = lambda;
    t.seed = seed_label;
    t.x_max = x_max;
    t.checkpoints = std::move(checkpoints);
    t.S.reserve(t.checkpoints.size());
    t.s_sq.reserve(t.checkpoints.size());
    t.lil_stat.reserve(t.checkpoints.size());

    long double s = 0.0L;
    long double var = 0.0L;
    std::size_t next_cp = 0;
    for (std::int64_t m = 1; m <= x_max; ++m) {
        const double inc = increments[static_cast<std::size_t>(m - 1)];
        s += static_cast<long double>(signs[static_cast<std::size_t>(m - 1)]) * inc;
        var += static_cast<long double>(inc) * inc;
        while (next_cp < t.checkpoints.size() && t.checkpoints[next_cp] == m) {
            const double sd = static_cast<double>(s);
            const double vd = static_cast<double>(var);
            t.S.push_back(sd);
            t.s_sq.push_back(vd);
            if (vd >= 8.0) {
                t.lil_stat.push_back(sd / std::sqrt(2.0 * vd * std::log(std::log(vd))));
            } else {
                t.lil_stat.push_back(std::numeric_limits<double>::quiet_NaN());
            }
            ++next_cp;
        }
    }
    return t;
}

WalkTrajectory walk(const AlphaValue& lambda, std::int64_t x_max, std::uint64_t seed,
                    std::vector<std::int64_t> checkpoints) {
    require_unit_interval(lambda);
    if (x_max < 1) throw Error(ErrorCategory::ConfigError, "x_max must be >= 1");
    return walk_from(lambda, sawtooth_increments(lambda, x_max),
                     rademacher_signs(x_max, seed), seed, std::move(checkpoints));
}

WitnessResult witness_from(const WalkTrajectory& trajectory) {
    WitnessResult w;
    for (std::size_t i = 0; i < trajectory.checkpoints.size(); ++i) {
        const std::int64_t x = trajectory.checkpoints[i];
        if (x < 16) continue;
        const double scale =
            std::sqrt(static_cast<double>(x) * std::log(std::log(static_cast<double>(x))));
        const double value = std::abs(trajectory.S[i]) / scale;
        if (value > w.witness) {
            w.witness = value;
            w.x_star = x;
        }
    }
    return w;
}

WitnessResult lower_bound_witness(const AlphaValue& lambda, std::int64_t x_max,
                                  std::uint64_t seed) {
    if (x_max < 16) {
        throw Error(ErrorCategory::ConfigError, "lower_bound_witness needs X >= 16");
    }
    return witness_from(walk(lambda, x_max, seed));
}

}  // namespace beatty
