#include "pptower/genfun.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pptower {

StandardYoungTableau::StandardYoungTableau(unsigned k, unsigned r, std::vector<unsigned> labels)
    : k_(k), r_(r), labels_(std::move(labels)) {
    if (labels_.size() != static_cast<std::size_t>(k) * r)
        throw std::invalid_argument("StandardYoungTableau: label count does not match shape");
    std::vector<bool> seen(k_ * r_ + 1, false);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < r_; ++j) {
            unsigned v = at(i, j);
            if (v < 1 || v > k_ * r_ || seen[v])
                throw std::invalid_argument("StandardYoungTableau: labels must be 1..kr, each once");
            seen[v] = true;
            if (j + 1 < r_ && at(i, j) >= at(i, j + 1))
                throw std::invalid_argument("StandardYoungTableau: rows must increase");
            if (i + 1 < k_ && at(i, j) >= at(i + 1, j))
                throw std::invalid_argument("StandardYoungTableau: columns must increase");
        }
}

unsigned StandardYoungTableau::row_of(unsigned label) const {
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < r_; ++j)
            if (at(i, j) == label) return i;
    throw std::invalid_argument("row_of: no such label");
}

namespace {

// Walk fillings by row-fill counts; a label may extend row i when row
// i-1 is strictly longer. Emits the row index sequence of each SYT.
void walk_syt(unsigned k, unsigned r, std::vector<unsigned>& fill,
              std::vector<unsigned>& row_seq, const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (row_seq.size() == static_cast<std::size_t>(k) * r) {
        fn(row_seq);
        return;
    }
    for (unsigned i = 0; i < k; ++i) {
        if (fill[i] == r) continue;
        if (i > 0 && fill[i - 1] <= fill[i]) continue;
        ++fill[i];
        row_seq.push_back(i);
        walk_syt(k, r, fill, row_seq, fn);
        row_seq.pop_back();
        --fill[i];
    }
}

void for_each_syt(unsigned k, unsigned r, const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (k == 0 || r == 0) throw std::invalid_argument("syt: k, r must be >= 1");
    std::vector<unsigned> fill(k, 0), row_seq;
    walk_syt(k, r, fill, row_seq, fn);
}

// numerator exponent and per-c denominator multiplicities of one term,
// from the row sequence of the labels
struct TermShape {
    unsigned num_exp = 0;
    std::vector<unsigned> den_exp;  // den_exp[c] = multiplicity of (1 - x^c), c = 1..r
};

TermShape term_shape(const std::vector<unsigned>& row_seq, unsigned r) {
    TermShape t;
    t.den_exp.assign(r + 1, 0);
    unsigned kr = static_cast<unsigned>(row_seq.size());
    unsigned c = 0;  // boxes of the subtableau in the first row
    for (unsigned l = 1; l <= kr; ++l) {
        if (row_seq[l - 1] == 0) ++c;
        ++t.den_exp[c];
        if (l < kr && row_seq[l] < row_seq[l - 1]) t.num_exp += c;
    }
    return t;
}

}  // namespace

std::vector<StandardYoungTableau> syt_enumerate(unsigned k, unsigned r) {
    std::vector<StandardYoungTableau> out;
    for_each_syt(k, r, [&](const std::vector<unsigned>& row_seq) {
        std::vector<unsigned> labels(k * r, 0);
        std::vector<unsigned> fill(k, 0);
        for (unsigned l = 1; l <= k * r; ++l) {
            unsigned i = row_seq[l - 1];
            labels[i * r + fill[i]] = l;
            ++fill[i];
        }
        out.emplace_back(k, r, std::move(labels));
    });
    return out;
}

mpz_class hook_count(unsigned k, unsigned r) {
    if (k == 0 || r == 0) throw std::invalid_argument("hook_count: k, r must be >= 1");
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), k * r);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < r; ++j) {
            unsigned hook = (r - 1 - j) + (k - 1 - i) + 1;
            num /= hook;
        }
    return num;
}

RationalFunction syt_term(const StandardYoungTableau& t) {
    std::vector<unsigned> row_seq(t.rows() * t.cols());
    for (unsigned l = 1; l <= t.rows() * t.cols(); ++l) row_seq[l - 1] = t.row_of(l);
    TermShape ts = term_shape(row_seq, t.cols());
    IntPolynomial den{1};
    for (unsigned c = 1; c < ts.den_exp.size(); ++c)
        for (unsigned e = 0; e < ts.den_exp[c]; ++e) den = den * one_minus_xc(c);
    return RationalFunction(IntPolynomial::monomial(ts.num_exp), std::move(den));
}

namespace {

IntPolynomial cyclotomic_product(const std::vector<unsigned>& mult) {
    IntPolynomial p{1};
    for (unsigned d = 1; d < mult.size(); ++d)
        for (unsigned e = 0; e < mult[d]; ++e) p = p * cyclotomic(d);
    return p;
}

}  // namespace

RationalFunction genfun(unsigned k, unsigned r) {
    std::vector<TermShape> terms;
    for_each_syt(k, r, [&](const std::vector<unsigned>& row_seq) {
        terms.push_back(term_shape(row_seq, r));
    });

    // common denominator: per-c maximum multiplicity
    std::vector<unsigned> common(r + 1, 0);
    for (const TermShape& t : terms)
        for (unsigned c = 1; c <= r; ++c) common[c] = std::max(common[c], t.den_exp[c]);

    IntPolynomial num;
    for (const TermShape& t : terms) {
        IntPolynomial part = IntPolynomial::monomial(t.num_exp);
        for (unsigned c = 1; c <= r; ++c)
            for (unsigned e = t.den_exp[c]; e < common[c]; ++e) part = part * one_minus_xc(c);
        num += part;
    }

    // denominator factorization: Phi_d divides (1-x^c) exactly when d | c.
    // prod_{d|c} Phi_d = x^c - 1 = -(1 - x^c), so switching to the
    // cyclotomic product flips the sign once per (1-x^c) factor.
    std::vector<unsigned> mult(r + 1, 0);
    unsigned factor_count = 0;
    for (unsigned c = 1; c <= r; ++c) factor_count += common[c];
    if (factor_count % 2 == 1) num = -num;
    for (unsigned d = 1; d <= r; ++d)
        for (unsigned c = d; c <= r; c += d) mult[d] += common[c];

    for (unsigned d = 1; d <= r; ++d) {
        IntPolynomial q;
        while (mult[d] > 0 && divide_exact(num, cyclotomic(d), q)) {
            num = std::move(q);
            --mult[d];
        }
    }
    return RationalFunction::from_coprime(std::move(num), cyclotomic_product(mult));
}

bool funceq_check(const RationalFunction& f, unsigned k, unsigned r) {
    const IntPolynomial& p = f.num();
    const IntPolynomial& q = f.den();
    long e = static_cast<long>(r) * (r - 1 + 2 * k) / 2 + p.degree() - q.degree();
    IntPolynomial lhs = p * q.reversed();
    IntPolynomial rhs = p.reversed() * q;
    if (e >= 0)
        lhs = lhs * IntPolynomial::monomial(static_cast<unsigned>(e));
    else
        rhs = rhs * IntPolynomial::monomial(static_cast<unsigned>(-e));
    if ((static_cast<unsigned long>(k) * r) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

bool funceq_check(unsigned k, unsigned r) { return funceq_check(genfun(k, r), k, r); }

}  // namespace pptower
