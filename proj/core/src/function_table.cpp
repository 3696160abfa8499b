#include "beatty/function_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "beatty/errors.hpp"
#include "beatty/rng.hpp"

namespace beatty {

namespace {

using u128 = unsigned __int128;

void check_index(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) {
        throw Error(ErrorCategory::ConfigError,
                    "table index " + std::to_string(m) + " outside [1, " +
                        std::to_string(n) + "]");
    }
}

void check_size(std::int64_t n) {
    if (n < 0) throw Error(ErrorCategory::ConfigError, "table size must be >= 0");
    if (n > 200'000'000) {
        throw Error(ErrorCategory::CapacityExceeded,
                    "table size " + std::to_string(n) + " beyond memory budget");
    }
}

}  // namespace

FunctionTable FunctionTable::from_integer_values(std::string name,
                                                 std::vector<std::int64_t> values) {
    check_size(static_cast<std::int64_t>(values.size()));
    FunctionTable t;
    t.name_ = std::move(name);
    t.n_ = static_cast<std::int64_t>(values.size());
    t.int_values_ = std::move(values);
    t.prefix_sq_.resize(t.int_values_.size());
    t.prefix_max_.resize(t.int_values_.size());
    u128 acc = 0;
    std::int64_t running_max = 0;
    for (std::size_t i = 0; i < t.int_values_.size(); ++i) {
        const std::int64_t v = t.int_values_[i];
        const std::int64_t av = v < 0 ? -v : v;
        acc += static_cast<u128>(av) * static_cast<u128>(av);
        running_max = std::max(running_max, av);
        t.prefix_sq_[i] = static_cast<double>(acc);
        t.prefix_max_[i] = static_cast<double>(running_max);
    }
    return t;
}

FunctionTable FunctionTable::from_complex_values(
    std::string name, std::vector<std::complex<double>> values) {
    check_size(static_cast<std::int64_t>(values.size()));
    FunctionTable t;
    t.name_ = std::move(name);
    t.n_ = static_cast<std::int64_t>(values.size());
    t.complex_values_ = std::move(values);
    t.prefix_sq_.resize(t.complex_values_.size());
    t.prefix_max_.resize(t.complex_values_.size());
    long double acc = 0;
    double running_max = 0;
    for (std::size_t i = 0; i < t.complex_values_.size(); ++i) {
        const double a = std::abs(t.complex_values_[i]);
        acc += static_cast<long double>(a) * a;
        running_max = std::max(running_max, a);
        t.prefix_sq_[i] = static_cast<double>(acc);
        t.prefix_max_[i] = running_max;
    }
    return t;
}

std::complex<double> FunctionTable::value(std::int64_t m) const {
    check_index(m, n_);
    if (!int_values_.empty()) {
        return {static_cast<double>(int_values_[static_cast<std::size_t>(m - 1)]), 0.0};
    }
    return complex_values_[static_cast<std::size_t>(m - 1)];
}

std::int64_t FunctionTable::int_value(std::int64_t m) const {
    check_index(m, n_);
    if (int_values_.empty()) {
        throw Error(ErrorCategory::ConfigError, "table is not integer-valued");
    }
    return int_values_[static_cast<std::size_t>(m - 1)];
}

double FunctionTable::prefix_sq(std::int64_t x) const {
    if (x < 1) return 0.0;
    check_index(x, n_);
    return prefix_sq_[static_cast<std::size_t>(x - 1)];
}

double FunctionTable::prefix_max(std::int64_t x) const {
    if (x < 1) return 0.0;
    check_index(x, n_);
    return prefix_max_[static_cast<std::size_t>(x - 1)];
}

double FunctionTable::l2_norm(std::int64_t x) const { return std::sqrt(prefix_sq(x)); }

std::complex<double> FunctionTable::prefix_sum(std::int64_t x) const {
    if (x < 1) return {0.0, 0.0};
    check_index(x, n_);
    if (!int_values_.empty()) {
        __int128 acc = 0;
        for (std::int64_t m = 1; m <= x; ++m) {
            acc += int_values_[static_cast<std::size_t>(m - 1)];
        }
        return {static_cast<double>(acc), 0.0};
    }
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::int64_t m = 1; m <= x; ++m) {
        const auto& v = complex_values_[static_cast<std::size_t>(m - 1)];
        acc += std::complex<long double>(v.real(), v.imag());
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

FunctionTable sieve_tau_k(std::int64_t n, int k) {
    check_size(n);
    if (k < 2 || k > 12) {
        throw Error(ErrorCategory::ConfigError, "tau_k requires 2 <= k <= 12");
    }
    std::vector<std::int64_t> current(static_cast<std::size_t>(n), 1);
    std::vector<std::int64_t> next(static_cast<std::size_t>(n));
    for (int step = 1; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (std::int64_t d = 1; d <= n; ++d) {
            const std::int64_t fd = current[static_cast<std::size_t>(d - 1)];
            for (std::int64_t m = d; m <= n; m += d) {
                next[static_cast<std::size_t>(m - 1)] += fd;
            }
        }
        current.swap(next);
    }
    return FunctionTable::from_integer_values("tau" + std::to_string(k),
                                              std::move(current));
}

FunctionTable sieve_prime_indicator(std::int64_t n) {
    check_size(n);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 1);
    if (n >= 1) v[0] = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (!v[static_cast<std::size_t>(p - 1)]) continue;
        for (std::int64_t m = p * p; m <= n; m += p) {
            v[static_cast<std::size_t>(m - 1)] = 0;
        }
    }
    return FunctionTable::from_integer_values("primes", std::move(v));
}

FunctionTable sieve_totient(std::int64_t n) {
    check_size(n);
    std::vector<std::int64_t> phi(static_cast<std::size_t>(n));
    std::iota(phi.begin(), phi.end(), std::int64_t{1});
    for (std::int64_t p = 2; p <= n; ++p) {
        if (phi[static_cast<std::size_t>(p - 1)] != p) continue;  // p composite
        for (std::int64_t m = p; m <= n; m += p) {
            phi[static_cast<std::size_t>(m - 1)] -=
                phi[static_cast<std::size_t>(m - 1)] / p;
        }
    }
    return FunctionTable::from_integer_values("totient", std::move(phi));
}

FunctionTable dirichlet_character(std::int64_t n, std::int64_t q,
                                  const std::vector<std::complex<double>>& residues) {
    check_size(n);
    if (q < 1 || static_cast<std::int64_t>(residues.size()) != q) {
        throw Error(ErrorCategory::InvalidCharacter,
                    "residue table must have exactly q entries");
    }
    constexpr double tol = 1e-9;
    for (std::int64_t r = 0; r < q; ++r) {
        const double a = std::abs(residues[static_cast<std::size_t>(r)]);
        if (std::gcd(r, q) > 1) {
            if (a != 0.0) {
                throw Error(ErrorCategory::InvalidCharacter,
                            "character must vanish on residues sharing a factor with q");
            }
        } else if (std::abs(a - 1.0) > tol) {
            throw Error(ErrorCategory::InvalidCharacter,
                        "character values on units must have modulus 1");
        }
    }
    if (std::abs(residues[static_cast<std::size_t>(1 % q)] -
                 std::complex<double>(1.0, 0.0)) > tol) {
        throw Error(ErrorCategory::InvalidCharacter, "character must satisfy chi(1) = 1");
    }
    for (std::int64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) > 1) continue;
        for (std::int64_t b = a; b < q; ++b) {
            if (std::gcd(b, q) > 1) continue;
            const auto lhs = residues[static_cast<std::size_t>((a * b) % q)];
            const auto rhs = residues[static_cast<std::size_t>(a)] *
                             residues[static_cast<std::size_t>(b)];
            if (std::abs(lhs - rhs) > tol) {
                throw Error(ErrorCategory::InvalidCharacter,
                            "character must be completely multiplicative on residues");
            }
        }
    }
    std::vector<std::complex<double>> v(static_cast<std::size_t>(n));
    for (std::int64_t m = 1; m <= n; ++m) {
        v[static_cast<std::size_t>(m - 1)] = residues[static_cast<std::size_t>(m % q)];
    }
    return FunctionTable::from_complex_values("chi" + std::to_string(q), std::move(v));
}

FunctionTable constant_table(std::int64_t n, std::complex<double> c) {
    check_size(n);
    if (c.imag() == 0.0 && c.real() == std::floor(c.real()) &&
        std::abs(c.real()) < 9e15) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(n),
                                    static_cast<std::int64_t>(c.real()));
        return FunctionTable::from_integer_values(
            c.real() == 0.0 ? "zero" : (c.real() == 1.0 ? "one" : "const"), std::move(v));
    }
    std::vector<std::complex<double>> v(static_cast<std::size_t>(n), c);
    return FunctionTable::from_complex_values("const", std::move(v));
}

FunctionTable identity_table(std::int64_t n) {
    check_size(n);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), std::int64_t{1});
    return FunctionTable::from_integer_values("id", std::move(v));
}

FunctionTable rademacher_table(std::int64_t n, std::uint64_t seed) {
    check_size(n);
    Xoshiro256StarStar rng(seed);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.next_sign();
    return FunctionTable::from_integer_values("rademacher", std::move(v));
}

std::vector<GrowthRatio> growth_ratios(const FunctionTable& table) {
    if (table.size() < 16) {
        throw Error(ErrorCategory::ConfigError, "growth_ratios requires N >= 16");
    }
    int max_r = 0;
    while ((std::int64_t{1} << (max_r + 1)) <= table.size()) ++max_r;
    // largest r with 2^{r+1} <= N
    std::vector<GrowthRatio> out;
    for (int r = 3; r + 1 <= max_r; ++r) {
        GrowthRatio g;
        g.r = r;
        const double lo = table.prefix_sq(std::int64_t{1} << r);
        const double hi = table.prefix_sq(std::int64_t{1} << (r + 1));
        if (lo == 0.0) {
            g.zero_norm = true;
        } else {
            g.ratio = std::sqrt(hi / lo);
        }
        out.push_back(g);
    }
    return out;
}

FunctionTable make_table(const std::string& f_spec, std::int64_t n,
                         std::uint64_t master_seed) {
    if (f_spec == "zero") return constant_table(n, 0.0);
    if (f_spec == "one") return constant_table(n, 1.0);
    if (f_spec == "id") return identity_table(n);
    if (f_spec == "primes") return sieve_prime_indicator(n);
    if (f_spec == "totient") return sieve_totient(n);
    if (f_spec == "rademacher") return rademacher_table(n, master_seed);
    if (f_spec == "chi4") {
        return dirichlet_character(n, 4, {{0, 0}, {1, 0}, {0, 0}, {-1, 0}});
    }
    if (f_spec == "chi3") {
        return dirichlet_character(n, 3, {{0, 0}, {1, 0}, {-1, 0}});
    }
    if (f_spec.rfind("tau", 0) == 0) {
        try {
            const int k = std::stoi(f_spec.substr(3));
            return sieve_tau_k(n, k);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            // fall through to the unknown-spec error
        }
    }
    throw Error(ErrorCategory::ConfigError, "unknown f spec '" + f_spec + "'");
}

bool f_spec_is_integer_valued(const std::string& f_spec) {
    return f_spec.rfind("chi", 0) != 0;
}

}  // namespace beatty
