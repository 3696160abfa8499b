#include "beatty/beatty_set.hpp"

#include <algorithm>
#include <cmath>

#include "beatty/errors.hpp"

namespace beatty {

namespace {

const AlphaValue& zero_beta() {
    static const AlphaValue z = AlphaValue::integer(0);
    return z;
}

void require_domain(const AlphaValue& alpha, const AlphaValue& beta) {
    if (sign_linear(1, alpha, nullptr, 1) < 0) {
        throw Error(ErrorCategory::ConfigError, "alpha must be >= 1");
    }
    if (sign_linear(1, beta, nullptr, 0) < 0) {
        throw Error(ErrorCategory::ConfigError, "beta must be >= 0");
    }
}

}  // namespace

bool BeattyWindow::contains(std::int64_t m) const {
    return std::binary_search(elements.begin(), elements.end(), m);
}

std::vector<std::int64_t> BeattyWindow::gaps() const {
    std::vector<std::int64_t> g;
    if (elements.size() < 2) return g;
    g.reserve(elements.size() - 1);
    for (std::size_t i = 1; i < elements.size(); ++i) {
        g.push_back(elements[i] - elements[i - 1]);
    }
    return g;
}

bool beatty_member(std::int64_t m, const AlphaValue& alpha, const AlphaValue& beta) {
    require_domain(alpha, beta);
    if (m < 1) return false;

    // Threshold test: fall back iff NOT (m > alpha + beta - 1),
    // i.e. alpha + beta >= m + 1.
    if (sign_linear(1, alpha, &beta, m + 1) >= 0) {
        // Bounded direct search: n*alpha + beta is increasing in n, so scan
        // until its floor passes m.
        for (std::int64_t n = 1;; ++n) {
            const std::int64_t k = floor_linear(n, alpha, &beta);
            if (k == m) return true;
            if (k > m) return false;
        }
    }

    // Candidate index: least n with n*alpha + beta >= m.
    const double alpha_d = alpha.to_double();
    const double beta_d = beta.to_double();
    std::int64_t n = static_cast<std::int64_t>(std::ceil(
        (static_cast<double>(m) - beta_d) / std::max(alpha_d, 1.0)));
    if (n < 1) n = 1;
    while (sign_linear(n, alpha, &beta, m) < 0) ++n;
    while (n > 1 && sign_linear(n - 1, alpha, &beta, m) >= 0) --n;
    if (n < 1) return false;
    if (sign_linear(n, alpha, &beta, m) < 0) return false;
    return sign_linear(n, alpha, &beta, m + 1) < 0;  // n*alpha + beta < m+1
}

bool beatty_member(std::int64_t m, const AlphaValue& alpha) {
    return beatty_member(m, alpha, zero_beta());
}

BeattyWindow beatty_enumerate(const AlphaValue& alpha, const AlphaValue& beta,
                              std::int64_t x) {
    require_domain(alpha, beta);
    if (x < 1) throw Error(ErrorCategory::ConfigError, "x must be >= 1");

    BeattyWindow w;
    w.alpha = alpha;
    w.beta = beta;
    w.x = x;
    const double alpha_d = std::max(alpha.to_double(), 1.0);
    w.elements.reserve(static_cast<std::size_t>(static_cast<double>(x) / alpha_d) + 4);
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t k = floor_linear(n, alpha, &beta);
        if (k > x) break;
        if (k >= 1 && (w.elements.empty() || w.elements.back() != k)) {
            w.elements.push_back(k);
        }
    }
    return w;
}

BeattyWindow beatty_enumerate(const AlphaValue& alpha, std::int64_t x) {
    return beatty_enumerate(alpha, zero_beta(), x);
}

AlphaValue sample_alpha(Xoshiro256StarStar& rng, double lo, double hi) {
    if (!(1.0 <= lo && lo < hi)) {
        throw Error(ErrorCategory::ConfigError, "sample_alpha requires 1 <= lo < hi");
    }
    // Non-squares up to 1000, fixed table.
    static const std::vector<std::int64_t> non_squares = [] {
        std::vector<std::int64_t> v;
        for (std::int64_t d = 2; d <= 1000; ++d) {
            const auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
            if (s * s != d && (s + 1) * (s + 1) != d) v.push_back(d);
        }
        return v;
    }();

    for (;;) {
        const std::int64_t d =
            non_squares[rng.next_below(non_squares.size())];
        const std::int64_t q = rng.next_in(1, 40);
        const std::int64_t r = rng.next_in(1, 40);
        const double root = std::sqrt(static_cast<double>(d));
        const double p_lo = lo * static_cast<double>(r) - static_cast<double>(q) * root;
        const double p_hi = hi * static_cast<double>(r) - static_cast<double>(q) * root;
        const auto pl = static_cast<std::int64_t>(std::ceil(p_lo)) - 1;
        const auto ph = static_cast<std::int64_t>(std::floor(p_hi)) + 1;
        if (pl > ph) continue;
        const std::int64_t p = rng.next_in(pl, ph);
        AlphaValue candidate = AlphaValue::quadratic(p, q, d, r);
        if (candidate.kind() != AlphaValue::Kind::Quadratic) continue;
        // Exact open-interval check against the requested bounds.
        if (sign_minus_double(candidate, lo) <= 0) continue;
        if (sign_minus_double(candidate, hi) >= 0) continue;
        return candidate;
    }
}

}  // namespace beatty
