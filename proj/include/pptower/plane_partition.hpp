#ifndef PPTOWER_PLANE_PARTITION_HPP
#define PPTOWER_PLANE_PARTITION_HPP

#include <gmpxx.h>

#include <vector>

#include "pptower/partition.hpp"

namespace pptower {

// k x r matrix of non-negative integers, weakly decreasing along rows
// and down columns. The counting statistic is the first-row sum.
class PlanePartition {
public:
    PlanePartition(unsigned k, unsigned r) : k_(k), r_(r), entries_(k * r, 0) {}
    PlanePartition(unsigned k, unsigned r, std::vector<unsigned> entries);

    unsigned rows() const { return k_; }
    unsigned cols() const { return r_; }
    unsigned at(unsigned i, unsigned j) const { return entries_[i * r_ + j]; }
    unsigned& at(unsigned i, unsigned j) { return entries_[i * r_ + j]; }
    unsigned first_row_sum() const;

    bool weakly_decreasing() const;
    bool strictly_decreasing() const;  // all entries positive as well

    bool operator==(const PlanePartition&) const = default;

private:
    unsigned k_, r_;
    std::vector<unsigned> entries_;  // row-major
};

using StrictPlanePartition = PlanePartition;

// All k x r plane partitions with first-row sum n. Backtracks row by
// row: the first row is a partition of n into at most r parts, every
// later row is weakly decreasing and entrywise <= the row above.
std::vector<PlanePartition> enumerate(unsigned k, unsigned r, unsigned n);

// Strict variant: entries strictly decrease along rows and down
// columns and are all positive.
std::vector<StrictPlanePartition> enumerate_strict(unsigned k, unsigned r, unsigned n);

// alpha_{k,r}(n) = |enumerate(k,r,n)|, counted without materializing
// the matrices. The OpenMP version splits over first-row choices; the
// serial version is the reference.
mpz_class alpha(unsigned k, unsigned r, unsigned n);
mpz_class alpha_serial(unsigned k, unsigned r, unsigned n);

// Multichain DP over partitions of weight <= n_max with at most r
// parts: alpha values for all n <= n_max at once. Same numbers as
// alpha() but polynomial cost; this is the fast path for large n.
std::vector<mpz_class> alpha_table(unsigned k, unsigned r, unsigned n_max);

// alpha-bar_k(n) = alpha(k, max(n,1), n), via the DP.
mpz_class alpha_bar(unsigned k, unsigned n);

// Staircase bijection onto strict plane partitions: adds the matrix
// with entry (i,j) = (k-i)+(r-j)-1 in 0-based indices plus one, i.e.
// top-left k+r-1 down to bottom-right 1.
StrictPlanePartition strictify(const PlanePartition& m);
PlanePartition strictify_inverse(const StrictPlanePartition& m);

// First-row-sum shift of the staircase, r(r-1+2k)/2.
unsigned staircase_shift(unsigned k, unsigned r);

}  // namespace pptower

#endif
