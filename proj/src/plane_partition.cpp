#include "pptower/plane_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptower {

PlanePartition::PlanePartition(unsigned k, unsigned r, std::vector<unsigned> entries)
    : k_(k), r_(r), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(k) * r)
        throw std::invalid_argument("PlanePartition: entry count does not match shape");
}

unsigned PlanePartition::first_row_sum() const {
    unsigned s = 0;
    for (unsigned j = 0; j < r_; ++j) s += at(0, j);
    return s;
}

bool PlanePartition::weakly_decreasing() const {
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < r_; ++j) {
            if (j + 1 < r_ && at(i, j) < at(i, j + 1)) return false;
            if (i + 1 < k_ && at(i, j) < at(i + 1, j)) return false;
        }
    return true;
}

bool PlanePartition::strictly_decreasing() const {
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < r_; ++j) {
            if (at(i, j) == 0) return false;
            if (j + 1 < r_ && at(i, j) <= at(i, j + 1)) return false;
            if (i + 1 < k_ && at(i, j) <= at(i + 1, j)) return false;
        }
    return true;
}

unsigned staircase_shift(unsigned k, unsigned r) { return r * (r - 1 + 2 * k) / 2; }

namespace {

// Rows below `above`, weakly decreasing, entrywise <= above.
template <typename Fn>
void for_each_row_below(const std::vector<unsigned>& above, std::vector<unsigned>& row,
                        unsigned j, Fn&& fn) {
    if (j == above.size()) {
        fn(row);
        return;
    }
    unsigned hi = std::min(above[j], j > 0 ? row[j - 1] : above[j]);
    for (unsigned v = 0; v <= hi; ++v) {
        row[j] = v;
        for_each_row_below(above, row, j + 1, fn);
    }
    row[j] = 0;
}

// `rows` must have capacity >= k: for_each_row_below keeps a reference
// to rows.back() across the push_back in the callback.
void fill_rows(std::vector<std::vector<unsigned>>& rows, unsigned k,
               std::vector<PlanePartition>* out, mpz_class* count) {
    if (rows.size() == k) {
        if (out) {
            PlanePartition m(k, static_cast<unsigned>(rows[0].size()));
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
            out->push_back(std::move(m));
        }
        if (count) ++*count;
        return;
    }
    std::vector<unsigned> row(rows[0].size(), 0);
    for_each_row_below(rows.back(), row, 0, [&](const std::vector<unsigned>& rw) {
        rows.push_back(rw);
        fill_rows(rows, k, out, count);
        rows.pop_back();
    });
}

std::vector<unsigned> padded_first_row(const Partition& p, unsigned r) {
    std::vector<unsigned> row(r, 0);
    for (unsigned j = 0; j < p.length(); ++j) row[j] = p.parts()[j];
    return row;
}

}  // namespace

std::vector<PlanePartition> enumerate(unsigned k, unsigned r, unsigned n) {
    if (k == 0 || r == 0) throw std::invalid_argument("enumerate: k, r must be >= 1");
    std::vector<PlanePartition> out;
    for (const Partition& top : partitions_of(n, r)) {
        std::vector<std::vector<unsigned>> rows;
        rows.reserve(k);
        rows.push_back(padded_first_row(top, r));
        fill_rows(rows, k, &out, nullptr);
    }
    return out;
}

mpz_class alpha_serial(unsigned k, unsigned r, unsigned n) {
    if (k == 0 || r == 0) throw std::invalid_argument("alpha: k, r must be >= 1");
    mpz_class count = 0;
    for (const Partition& top : partitions_of(n, r)) {
        std::vector<std::vector<unsigned>> rows;
        rows.reserve(k);
        rows.push_back(padded_first_row(top, r));
        fill_rows(rows, k, nullptr, &count);
    }
    return count;
}

mpz_class alpha(unsigned k, unsigned r, unsigned n) {
    if (k == 0 || r == 0) throw std::invalid_argument("alpha: k, r must be >= 1");
    auto tops = partitions_of(n, r);
    mpz_class total = 0;
#pragma omp parallel
    {
        mpz_class local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(tops.size()); ++i) {
            std::vector<std::vector<unsigned>> rows;
            rows.reserve(k);
            rows.push_back(padded_first_row(tops[i], r));
            fill_rows(rows, k, nullptr, &local);
        }
#pragma omp critical
        total += local;
    }
    return total;
}

namespace {

// Rows strictly below `above`, positive and strictly decreasing.
template <typename Fn>
void for_each_strict_row_below(const std::vector<unsigned>& above, std::vector<unsigned>& row,
                               unsigned j, Fn&& fn) {
    if (j == above.size()) {
        fn(row);
        return;
    }
    if (above[j] == 0) return;
    unsigned hi = above[j] - 1;
    if (j > 0) hi = std::min(hi, row[j - 1] - 1);
    for (unsigned v = 1; v <= hi; ++v) {
        row[j] = v;
        for_each_strict_row_below(above, row, j + 1, fn);
    }
    row[j] = 0;
}

void fill_strict_rows(std::vector<std::vector<unsigned>>& rows, unsigned k,
                      std::vector<StrictPlanePartition>& out) {
    if (rows.size() == k) {
        unsigned r = static_cast<unsigned>(rows[0].size());
        StrictPlanePartition m(k, r);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < r; ++j) m.at(i, j) = rows[i][j];
        out.push_back(std::move(m));
        return;
    }
    std::vector<unsigned> row(rows[0].size(), 0);
    for_each_strict_row_below(rows.back(), row, 0, [&](const std::vector<unsigned>& rw) {
        rows.push_back(rw);
        fill_strict_rows(rows, k, out);
        rows.pop_back();
    });
}

// Strictly decreasing positive first rows of length r summing to n.
template <typename Fn>
void strict_first_rows(unsigned r, unsigned n, std::vector<unsigned>& row, Fn&& fn) {
    unsigned j = static_cast<unsigned>(row.size());
    if (j == r) {
        if (n == 0) fn(row);
        return;
    }
    unsigned left = r - j;  // entries still to place; they are >= left-1, ..., >= 1
    unsigned min_tail = left * (left - 1) / 2;
    unsigned lo = left;  // this entry must exceed the left-1 strictly smaller ones
    if (n < min_tail + lo) return;
    unsigned hi = n - min_tail;
    if (j > 0) hi = std::min(hi, row[j - 1] - 1);
    for (unsigned v = lo; v <= hi; ++v) {
        row.push_back(v);
        strict_first_rows(r, n - v, row, fn);
        row.pop_back();
    }
}

}  // namespace

std::vector<StrictPlanePartition> enumerate_strict(unsigned k, unsigned r, unsigned n) {
    if (k == 0 || r == 0) throw std::invalid_argument("enumerate_strict: k, r must be >= 1");
    std::vector<StrictPlanePartition> out;
    std::vector<unsigned> top;
    strict_first_rows(r, n, top, [&](const std::vector<unsigned>& t) {
        std::vector<std::vector<unsigned>> rows;
        rows.reserve(k);
        rows.push_back(t);
        fill_strict_rows(rows, k, out);
    });
    return out;
}

namespace {

// Partitions of weight <= n_max with at most r parts, grouped so that
// weights are non-decreasing along the list.
std::vector<Partition> lattice_elements(unsigned r, unsigned n_max) {
    std::vector<Partition> elems;
    for (unsigned w = 0; w <= n_max; ++w)
        for (Partition& p : partitions_of(w, r)) elems.push_back(std::move(p));
    return elems;
}

bool contained(const Partition& a, const Partition& b) {
    if (a.length() > b.length()) return false;
    for (unsigned i = 0; i < a.length(); ++i)
        if (a.parts()[i] > b.parts()[i]) return false;
    return true;
}

}  // namespace

std::vector<mpz_class> alpha_table(unsigned k, unsigned r, unsigned n_max) {
    if (k == 0 || r == 0) throw std::invalid_argument("alpha_table: k, r must be >= 1");
    auto elems = lattice_elements(std::min(r, std::max(n_max, 1u)), n_max);
    std::size_t m = elems.size();

    // downset adjacency: indices of all elements contained in elems[i]
    std::vector<std::vector<std::uint32_t>> down(m);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned wi = elems[i].weight();
        for (std::size_t j = 0; j < m; ++j) {
            if (elems[j].weight() > wi) break;
            if (contained(elems[j], elems[i])) down[i].push_back(static_cast<std::uint32_t>(j));
        }
    }

    // g_1 = 1; g_{t+1}(mu) = sum over the downset of mu of g_t
    std::vector<mpz_class> g(m, 1), next(m);
    for (unsigned t = 1; t < k; ++t) {
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = 0;
            for (std::uint32_t j : down[i]) next[i] += g[j];
        }
        g.swap(next);
    }

    std::vector<mpz_class> table(n_max + 1);
    for (std::size_t i = 0; i < m; ++i) table[elems[i].weight()] += g[i];
    return table;
}

mpz_class alpha_bar(unsigned k, unsigned n) { return alpha_table(k, std::max(n, 1u), n)[n]; }

StrictPlanePartition strictify(const PlanePartition& m) {
    unsigned k = m.rows(), r = m.cols();
    StrictPlanePartition s(k, r);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < r; ++j) s.at(i, j) = m.at(i, j) + (k - i) + (r - j) - 1;
    if (!s.strictly_decreasing())
        throw std::invalid_argument("strictify: input is not a plane partition");
    return s;
}

PlanePartition strictify_inverse(const StrictPlanePartition& s) {
    unsigned k = s.rows(), r = s.cols();
    PlanePartition m(k, r);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < r; ++j) {
            unsigned stair = (k - i) + (r - j) - 1;
            if (s.at(i, j) < stair)
                throw std::invalid_argument("strictify_inverse: entry below the staircase");
            m.at(i, j) = s.at(i, j) - stair;
        }
    if (!m.weakly_decreasing())
        throw std::invalid_argument("strictify_inverse: input is not a strict plane partition");
    return m;
}

}  // namespace pptower
