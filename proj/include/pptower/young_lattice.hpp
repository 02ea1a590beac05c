#ifndef PPTOWER_YOUNG_LATTICE_HPP
#define PPTOWER_YOUNG_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

#include "pptower/partition.hpp"

namespace pptower {

// mu <= lambda componentwise, missing parts read as 0.
bool contains(const Partition& mu, const Partition& lambda);

// Principal order ideal of the Young lattice below a fixed partition:
// every mu contained in lambda, ordered by weight.
class OrderIdeal {
public:
    explicit OrderIdeal(const Partition& lambda);

    const Partition& top() const { return elements_.back(); }
    const std::vector<Partition>& elements() const { return elements_; }

    // Number of multichains empty <= mu_1 <= ... <= mu_{k-1} <= lambda,
    // by iterated downset summation.
    mpz_class multichain_count(unsigned k) const;
    // values for k = 1..k_max from a single DP sweep
    std::vector<mpz_class> multichain_counts(unsigned k_max) const;

private:
    std::vector<Partition> elements_;              // weight-sorted, empty first, top last
    std::vector<std::vector<std::uint32_t>> down_;  // downset indices per element
};

mpz_class multichain_count(const Partition& lambda, unsigned k);

// Polynomial in k with exact rational coefficients, ascending degree.
class KPolynomial {
public:
    KPolynomial() = default;
    explicit KPolynomial(std::vector<mpq_class> coeffs);

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    mpq_class eval(const mpq_class& k) const;
    mpz_class eval_int(long k) const;  // throws if the value is not an integer

    KPolynomial operator+(const KPolynomial&) const;
    bool operator==(const KPolynomial&) const = default;

private:
    std::vector<mpq_class> coeffs_;
};

// Exact Lagrange interpolation through (points[i], values[i]).
KPolynomial interpolate(const std::vector<long>& points, const std::vector<mpz_class>& values);

// Zeta polynomial of the principal ideal below lambda: the unique
// polynomial of degree <= |lambda| matching multichain_count(lambda,k)
// at k = 1..|lambda|+1. Verified on two extra sample points.
KPolynomial zeta_poly(const Partition& lambda);

// alpha_{k,r}(n) as a polynomial in k: sum of zeta_poly over all
// partitions of n with at most r parts. r = kUnbounded gives the
// alpha-bar polynomial.
KPolynomial alpha_poly(unsigned n, unsigned r);

// All s in [0, bound] with p(-s) = 0, by exact evaluation.
std::vector<long> negative_integer_roots(const KPolynomial& p, unsigned bound);

}  // namespace pptower

#endif
