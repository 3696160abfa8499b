#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beatty {

// Tabulated arithmetic function f(1..N) with prefix statistics:
//
//   prefix_sq(x)  = sum_{m<=x} |f(m)|^2        (the squared restricted l2 norm)
//   prefix_max(x) = max_{m<=x} |f(m)|
//   sup_proxy(x)  = 1 + prefix_max(x)          (the M(f,x) normaliser)
//
// Integer-valued tables keep an int64 value array and accumulate prefix_sq
// in 128-bit integers, so the stored statistics carry no accumulated
// floating-point drift.  Complex tables (Dirichlet characters) accumulate in
// long double.
class FunctionTable {
  public:
    static FunctionTable from_integer_values(std::string name,
                                             std::vector<std::int64_t> values);
    static FunctionTable from_complex_values(std::string name,
                                             std::vector<std::complex<double>> values);

    const std::string& name() const { return name_; }
    std::int64_t size() const { return n_; }
    bool integer_valued() const { return !int_values_.empty() || n_ == 0; }

    // 1-based access, m in [1, N].
    std::complex<double> value(std::int64_t m) const;
    std::int64_t int_value(std::int64_t m) const;
    const std::vector<std::int64_t>& int_values() const { return int_values_; }

    double prefix_sq(std::int64_t x) const;
    double prefix_max(std::int64_t x) const;
    double sup_proxy(std::int64_t x) const { return 1.0 + prefix_max(x); }
    double l2_norm(std::int64_t x) const;

    // S(f,x) = sum_{m<=x} f(m), computed on demand.
    std::complex<double> prefix_sum(std::int64_t x) const;

  private:
    std::string name_;
    std::int64_t n_ = 0;
    std::vector<std::int64_t> int_values_;            // 0-based storage for f(1..N)
    std::vector<std::complex<double>> complex_values_;
    std::vector<double> prefix_sq_;
    std::vector<double> prefix_max_;
};

// tau_k via k-1 divisor convolutions with the all-ones table.
FunctionTable sieve_tau_k(std::int64_t n, int k);
// Characteristic function of the primes (Eratosthenes).
FunctionTable sieve_prime_indicator(std::int64_t n);
// Euler totient via the classic multiplicative sieve.
FunctionTable sieve_totient(std::int64_t n);
// Periodic extension of a residue table for a completely multiplicative
// character mod q; validates the defining properties.
FunctionTable dirichlet_character(std::int64_t n, std::int64_t q,
                                  const std::vector<std::complex<double>>& residues);
FunctionTable constant_table(std::int64_t n, std::complex<double> c);
FunctionTable identity_table(std::int64_t n);
// i.i.d. +-1 values from Xoshiro256StarStar(seed), sign = top output bit.
FunctionTable rademacher_table(std::int64_t n, std::uint64_t seed);

struct GrowthRatio {
    int r = 0;
    double ratio = 0.0;    // ||f|_{2^{r+1}}||_2 / ||f|_{2^r}||_2
    bool zero_norm = false;  // denominator vanished; ratio not meaningful
};

// Dyadic norm ratios for r = 3 .. floor(log2 N) - 1; requires N >= 16.
std::vector<GrowthRatio> growth_ratios(const FunctionTable& table);

// CLI f-spec: zero | one | id | tau<k> | primes | totient | rademacher |
// chi3 | chi4.  Rademacher tables are seeded with the master seed.
FunctionTable make_table(const std::string& f_spec, std::int64_t n,
                         std::uint64_t master_seed);
bool f_spec_is_integer_valued(const std::string& f_spec);

}  // namespace beatty
