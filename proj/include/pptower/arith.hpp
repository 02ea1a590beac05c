#ifndef PPTOWER_ARITH_HPP
#define PPTOWER_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "pptower/partition.hpp"

namespace pptower {

// Smallest-prime-factor sieve; spf(1) = 1.
class SpfSieve {
public:
    explicit SpfSieve(std::uint64_t limit);
    std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
    std::uint64_t limit() const { return spf_.size() - 1; }
    std::vector<std::uint32_t> primes() const;

private:
    std::vector<std::uint32_t> spf_;
};

// (prime, exponent) pairs of n by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Moebius function of a small integer.
int moebius(std::uint64_t n);

// A_{k,r}(n): product of alpha_{k,r}(a) over the prime-power exponents
// a of n. r = kUnbounded uses the stabilized alpha-bar values.
mpz_class dirichlet_coeff(unsigned k, unsigned r, std::uint64_t n);

// Map n -> A_{k,r}(n) for n <= N, with a summatory accessor.
class DirichletTable {
public:
    DirichletTable(unsigned k, unsigned r, std::uint64_t N);

    unsigned k() const { return k_; }
    unsigned r() const { return r_; }
    const mpz_class& coeff(std::uint64_t n) const { return coeffs_.at(n); }
    const std::map<std::uint64_t, mpz_class>& coeffs() const { return coeffs_; }
    mpz_class summatory(std::uint64_t N) const;

private:
    unsigned k_, r_;
    std::map<std::uint64_t, mpz_class> coeffs_;
};

// Sum of A_{k,r}(n) for n <= N via an SPF sieve; each n costs one
// factorization walk over cached alpha values (exponents <= log2 N).
// OpenMP over n with per-thread partial sums; _serial is the reference.
mpz_class summatory(unsigned k, unsigned r, std::uint64_t N);
mpz_class summatory_serial(unsigned k, unsigned r, std::uint64_t N);

// One row per sample: summatory(k,r,N) / (N (log N)^{k-1}).
struct GrowthSample {
    std::uint64_t N;
    mpz_class sum;
    double ratio;
};
std::vector<GrowthSample> fit_growth(unsigned k, unsigned r,
                                     const std::vector<std::uint64_t>& samples);

// Formal logarithm of a power series with constant term 1.
std::vector<mpq_class> log_series(const std::vector<mpz_class>& coeffs);

// Dahlquist exponents: beta(m) = sum_{d|m} mu(m/d) (d/m) B(d) where
// B is the log-series of F_{k,r}. Throws if the result is not an
// integer. Series coefficients are taken through x^M (M >= m).
mpz_class beta(unsigned k, unsigned r, unsigned m, unsigned M);

// All beta(1..M) from a single log-series pass.
std::vector<mpz_class> beta_series(unsigned k, unsigned r, unsigned M);

// beta-bar_k(m) = beta_{k,m}(m).
mpz_class beta_bar(unsigned k, unsigned m);

// Truncated Euler product of Z_{k,r}(s): product over primes p <= P of
// the series of F_{k,r} evaluated at p^{-s} through x^M.
struct EulerEval {
    double value;
    double last_factor;  // deviation of the final prime's factor from 1
};
EulerEval euler_eval(unsigned k, unsigned r, double s, std::uint64_t P, unsigned M);

// Riemann zeta at real s > 1 via the Euler product (truncated).
double zeta_euler(double s, std::uint64_t P);

}  // namespace pptower

#endif
