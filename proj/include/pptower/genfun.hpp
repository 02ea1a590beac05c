#ifndef PPTOWER_GENFUN_HPP
#define PPTOWER_GENFUN_HPP

#include <gmpxx.h>

#include <vector>

#include "pptower/rational_function.hpp"

namespace pptower {

// Bijective filling of the k x r rectangle with 1..kr, increasing
// along rows and down columns.
class StandardYoungTableau {
public:
    StandardYoungTableau(unsigned k, unsigned r, std::vector<unsigned> labels);

    unsigned rows() const { return k_; }
    unsigned cols() const { return r_; }
    unsigned at(unsigned i, unsigned j) const { return labels_[i * r_ + j]; }
    // row index (0-based) of a given label
    unsigned row_of(unsigned label) const;

    bool operator==(const StandardYoungTableau&) const = default;

private:
    unsigned k_, r_;
    std::vector<unsigned> labels_;  // row-major
};

// All SYT of rectangular shape r^k, ordered by the row sequence of the
// labels (top rows filled first).
std::vector<StandardYoungTableau> syt_enumerate(unsigned k, unsigned r);

// (kr)! over the product of hook lengths of the k x r rectangle.
mpz_class hook_count(unsigned k, unsigned r);

// The tableau's factor product: for each l = 1..kr, with c(T_l) the
// number of labels <= l in the first row, the factor is
// x^d / (1 - x^{c(T_l)}) where d = c(T_l) if label l+1 sits in a
// higher row than label l, and d = 0 otherwise.
RationalFunction syt_term(const StandardYoungTableau& t);

// F_{k,r}(x): sum of syt_term over all SYT of shape r^k, reduced. The
// terms are summed over a common denominator of (1-x^c) powers and the
// result is reduced by its (fully known) cyclotomic factorization.
RationalFunction genfun(unsigned k, unsigned r);

// Exact check of F(x) = (-1)^{kr} x^{-r(r-1+2k)/2} F(1/x) as a
// polynomial identity on the reduced numerator and denominator.
bool funceq_check(unsigned k, unsigned r);
bool funceq_check(const RationalFunction& f, unsigned k, unsigned r);

}  // namespace pptower

#endif
