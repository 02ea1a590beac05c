#include "pptower/young_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptower {

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) {
        // extra parts of mu must all be 0, but parts are positive
        return false;
    }
    for (unsigned i = 0; i < mu.length(); ++i)
        if (mu.parts()[i] > lambda.parts()[i]) return false;
    return true;
}

namespace {

// All mu <= lambda, by choosing each part within the component bound.
void ideal_elements(const Partition& lambda, unsigned idx, unsigned prev,
                    std::vector<unsigned>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (idx == lambda.length()) return;
    for (unsigned v = 1; v <= std::min(lambda.parts()[idx], prev); ++v) {
        cur.push_back(v);
        ideal_elements(lambda, idx + 1, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

OrderIdeal::OrderIdeal(const Partition& lambda) {
    std::vector<unsigned> cur;
    ideal_elements(lambda, 0, lambda.length() ? lambda.parts()[0] : 0, cur, elements_);
    std::stable_sort(elements_.begin(), elements_.end(),
                     [](const Partition& a, const Partition& b) { return a.weight() < b.weight(); });
    // the top is the unique element of maximal weight
    down_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        unsigned wi = elements_[i].weight();
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            if (elements_[j].weight() > wi) break;
            if (contains(elements_[j], elements_[i])) down_[i].push_back(static_cast<std::uint32_t>(j));
        }
    }
}

mpz_class OrderIdeal::multichain_count(unsigned k) const {
    return multichain_counts(k).back();
}

std::vector<mpz_class> OrderIdeal::multichain_counts(unsigned k_max) const {
    if (k_max == 0) throw std::invalid_argument("multichain_counts: k_max must be >= 1");
    std::size_t m = elements_.size();
    std::vector<mpz_class> g(m, 1), next(m), out;
    out.push_back(g[m - 1]);
    for (unsigned t = 1; t < k_max; ++t) {
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = 0;
            for (std::uint32_t j : down_[i]) next[i] += g[j];
        }
        g.swap(next);
        out.push_back(g[m - 1]);
    }
    return out;
}

mpz_class multichain_count(const Partition& lambda, unsigned k) {
    return OrderIdeal(lambda).multichain_count(k);
}

KPolynomial::KPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class KPolynomial::eval(const mpq_class& k) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

mpz_class KPolynomial::eval_int(long k) const {
    mpq_class v = eval(mpq_class(k));
    if (v.get_den() != 1) throw std::logic_error("KPolynomial: non-integer value at integer point");
    return v.get_num();
}

KPolynomial KPolynomial::operator+(const KPolynomial& o) const {
    std::vector<mpq_class> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
    }
    return KPolynomial(std::move(v));
}

KPolynomial interpolate(const std::vector<long>& points, const std::vector<mpz_class>& values) {
    if (points.size() != values.size())
        throw std::invalid_argument("interpolate: point/value count mismatch");
    std::size_t m = points.size();
    std::vector<mpq_class> acc(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            basis.push_back(0);
            for (std::size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - mpq_class(points[j]) * basis[d];
            basis[0] = -mpq_class(points[j]) * basis[0];
            denom *= mpq_class(points[i] - points[j]);
        }
        mpq_class w = mpq_class(values[i]) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += w * basis[d];
    }
    for (auto& c : acc) c.canonicalize();
    return KPolynomial(std::move(acc));
}

KPolynomial zeta_poly(const Partition& lambda) {
    unsigned n = lambda.weight();
    if (n == 0) throw std::invalid_argument("zeta_poly: lambda must be nonempty");
    OrderIdeal ideal(lambda);
    std::vector<mpz_class> counts = ideal.multichain_counts(n + 3);
    std::vector<long> pts;
    std::vector<mpz_class> vals;
    for (unsigned k = 1; k <= n + 1; ++k) {
        pts.push_back(k);
        vals.push_back(counts[k - 1]);
    }
    KPolynomial z = interpolate(pts, vals);
    // overdetermined sanity check on two extra sample points
    for (unsigned k = n + 2; k <= n + 3; ++k)
        if (z.eval_int(k) != counts[k - 1])
            throw std::logic_error("zeta_poly: interpolation check failed");
    return z;
}

KPolynomial alpha_poly(unsigned n, unsigned r) {
    if (n == 0) throw std::invalid_argument("alpha_poly: n must be >= 1");
    KPolynomial acc;
    for (const Partition& lambda : partitions_of(n, r)) acc = acc + zeta_poly(lambda);
    return acc;
}

std::vector<long> negative_integer_roots(const KPolynomial& p, unsigned bound) {
    std::vector<long> roots;
    for (long s = 0; s <= static_cast<long>(bound); ++s)
        if (p.is_zero() || p.eval(mpq_class(-s)) == 0) roots.push_back(s);
    return roots;
}

}  // namespace pptower
