#include "pptower/partition.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace pptower {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("Partition: parts must be positive and weakly decreasing");
    }
}

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned p : parts_) w += p;
    return w;
}

namespace {

void emit(unsigned remaining, unsigned max_part, unsigned parts_left,
          std::vector<unsigned>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) return;
    unsigned hi = std::min(remaining, max_part);
    // largest first part first gives decreasing lexicographic order
    for (unsigned p = hi; p >= 1; --p) {
        cur.push_back(p);
        emit(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n, unsigned max_parts) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    emit(n, n == 0 ? 1 : n, max_parts, cur, out);
    return out;
}

mpz_class count_restricted(unsigned n, unsigned r) {
    if (r == 0) throw std::invalid_argument("count_restricted: r must be >= 1");
    // p(m, j) = partitions of m into parts of size <= j  (conjugate of
    // "at most j parts"); single rolling row over j.
    std::vector<mpz_class> row(n + 1);
    row[0] = 1;
    for (unsigned j = 1; j <= r && j <= n; ++j)
        for (unsigned m = j; m <= n; ++m) row[m] += row[m - j];
    return row[n];
}

mpz_class q(unsigned n) {
    static std::vector<mpz_class> cache{1};
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        mpz_class acc = 0;
        for (unsigned j = 1;; ++j) {
            unsigned g1 = j * (3 * j - 1) / 2;
            unsigned g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            int sign = (j % 2 == 1) ? 1 : -1;
            acc += sign * cache[m - g1];
            if (g2 <= m) acc += sign * cache[m - g2];
        }
        cache.push_back(acc);
    }
    return cache[n];
}

double hr_estimate(unsigned n) {
    if (n == 0) throw std::invalid_argument("hr_estimate: n must be >= 1");
    double x = static_cast<double>(n);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace pptower
