#include "pptower/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace pptower {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(unsigned e, mpz_class c) {
    std::vector<mpz_class> v(e + 1);
    v[e] = std::move(c);
    return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::leading() const {
    if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
    return coeffs_.back();
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::reversed() const {
    return IntPolynomial(std::vector<mpz_class>(coeffs_.rbegin(), coeffs_.rend()));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / g;
    return IntPolynomial(std::move(v));
}

bool divide_exact(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& q) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero");
    if (a.is_zero()) {
        q = {};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> rem(a.coeffs());
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1);
    const mpz_class& lb = b.coeffs().back();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class f = rem[i] / lb;
        int shift = i - b.degree();
        for (int j = 0; j <= b.degree(); ++j) rem[shift + j] -= f * b.coeff(j);
        quot[shift] = std::move(f);
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    q = IntPolynomial(std::move(quot));
    return true;
}

namespace {

// pseudo-remainder: lb^(da-db+1) * a mod b
IntPolynomial prem(IntPolynomial a, const IntPolynomial& b) {
    const mpz_class& lb = b.coeffs().back();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        mpz_class la = a.leading();
        std::vector<mpz_class> v(a.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = a.coeff(i) * lb;
            if (static_cast<int>(i) >= shift) v[i] -= la * b.coeff(i - shift);
        }
        a = IntPolynomial(std::move(v));
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = prem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

IntPolynomial one_minus_xc(unsigned c) {
    std::vector<mpz_class> v(c + 1);
    v[0] = 1;
    v[c] = -1;
    return IntPolynomial(std::move(v));
}

const IntPolynomial& cyclotomic(unsigned d) {
    static std::map<unsigned, IntPolynomial> cache;
    static std::recursive_mutex mtx;  // the divisor recursion re-enters
    std::lock_guard lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e
    IntPolynomial num = -one_minus_xc(d);
    for (unsigned e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        const IntPolynomial& phi = cyclotomic(e);
        IntPolynomial q;
        if (!divide_exact(num, phi, q))
            throw std::logic_error("cyclotomic: inexact division");
        num = std::move(q);
    }
    return cache.emplace(d, std::move(num)).first->second;
}

}  // namespace pptower
