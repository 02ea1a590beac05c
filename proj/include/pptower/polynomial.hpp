#ifndef PPTOWER_POLYNOMIAL_HPP
#define PPTOWER_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <vector>

namespace pptower {

// Integer-coefficient polynomial in one variable, ascending degree,
// trailing zeros stripped. degree() of the zero polynomial is -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(unsigned e, mpz_class c = 1);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    mpz_class leading() const;

    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    // x^deg * p(1/x): coefficient list reversed.
    IntPolynomial reversed() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial&) const;
    IntPolynomial operator-(const IntPolynomial&) const;
    IntPolynomial operator*(const IntPolynomial&) const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    bool operator==(const IntPolynomial&) const = default;

    mpz_class content() const;           // gcd of coefficients, >= 0
    IntPolynomial primitive_part() const;  // content divided out, leading > 0

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

// Quotient and remainder of exact division; returns false (and leaves
// q untouched) if b does not divide a over the integers.
bool divide_exact(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (primitive PRS).
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

// d-th cyclotomic polynomial, memoized.
const IntPolynomial& cyclotomic(unsigned d);

// 1 - x^c
IntPolynomial one_minus_xc(unsigned c);

}  // namespace pptower

#endif
