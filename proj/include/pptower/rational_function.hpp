#ifndef PPTOWER_RATIONAL_FUNCTION_HPP
#define PPTOWER_RATIONAL_FUNCTION_HPP

#include <vector>

#include "pptower/polynomial.hpp"

namespace pptower {

// Reduced quotient of integer polynomials. Canonical form: num and den
// share no polynomial factor over Q, the integer contents are coprime,
// and the lowest-order nonzero coefficient of den is positive.
class RationalFunction {
public:
    RationalFunction() : num_({0}), den_({1}) {}
    RationalFunction(IntPolynomial num, IntPolynomial den);
    explicit RationalFunction(IntPolynomial p) : RationalFunction(std::move(p), {1}) {}

    // For callers that already know num and den share no polynomial
    // factor; skips the gcd and only normalizes content and sign.
    static RationalFunction from_coprime(IntPolynomial num, IntPolynomial den);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool finite_at_zero() const { return den_.coeff(0) != 0; }

    RationalFunction operator+(const RationalFunction&) const;
    RationalFunction operator*(const RationalFunction&) const;
    bool operator==(const RationalFunction&) const = default;

private:
    IntPolynomial num_, den_;
    void reduce();
    void normalize();
};

// Maclaurin coefficients of f through x^N by the linear recurrence
// from the denominator. Requires f finite at 0; the result is exact
// and must come out integral (it always does for counting series).
std::vector<mpz_class> series(const RationalFunction& f, unsigned N);

}  // namespace pptower

#endif
