#include "pptower/rational_function.hpp"

#include <stdexcept>

namespace pptower {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    reduce();
}

RationalFunction RationalFunction::from_coprime(IntPolynomial num, IntPolynomial den) {
    RationalFunction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    if (f.den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    f.normalize();
    return f;
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = {1};
        return;
    }
    IntPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        IntPolynomial qn, qd;
        if (!divide_exact(num_, g, qn) || !divide_exact(den_, g, qd))
            throw std::logic_error("RationalFunction: gcd does not divide");
        num_ = std::move(qn);
        den_ = std::move(qd);
    }
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = {1};
        return;
    }
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    // lowest-order nonzero coefficient of den must end up positive
    std::size_t low = 0;
    while (den_.coeff(low) == 0) ++low;
    if (den_.coeff(low) < 0) c = -c;
    std::vector<mpz_class> vn(num_.coeffs().size()), vd(den_.coeffs().size());
    for (std::size_t i = 0; i < vn.size(); ++i) vn[i] = num_.coeff(i) / c;
    for (std::size_t i = 0; i < vd.size(); ++i) vd[i] = den_.coeff(i) / c;
    num_ = IntPolynomial(std::move(vn));
    den_ = IntPolynomial(std::move(vd));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::vector<mpz_class> series(const RationalFunction& f, unsigned N) {
    if (!f.finite_at_zero()) throw std::invalid_argument("series: denominator vanishes at 0");
    const auto& p = f.num();
    const auto& q = f.den();
    mpq_class q0(q.coeff(0));
    std::vector<mpq_class> c(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        mpq_class acc(p.coeff(n));
        for (unsigned j = 1; j <= n && j <= static_cast<unsigned>(q.degree()); ++j)
            acc -= mpq_class(q.coeff(j)) * c[n - j];
        c[n] = acc / q0;
        c[n].canonicalize();
    }
    std::vector<mpz_class> out(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        if (c[n].get_den() != 1)
            throw std::logic_error("series: non-integer coefficient");
        out[n] = c[n].get_num();
    }
    return out;
}

}  // namespace pptower
