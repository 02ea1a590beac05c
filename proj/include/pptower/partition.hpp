#ifndef PPTOWER_PARTITION_HPP
#define PPTOWER_PARTITION_HPP

#include <gmpxx.h>

#include <limits>
#include <vector>

namespace pptower {

// Weakly decreasing list of positive integers; the empty list is the
// partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const;
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool operator==(const Partition&) const = default;
    // decreasing lexicographic on the part lists
    bool operator<(const Partition& o) const { return parts_ > o.parts_; }

private:
    std::vector<unsigned> parts_;
};

inline constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max();

// All partitions of n with at most max_parts parts, in decreasing
// lexicographic order. n = 0 yields the single empty partition.
std::vector<Partition> partitions_of(unsigned n, unsigned max_parts = kUnbounded);

// p_r(n): number of partitions of n into at most r parts, by the
// two-variable recurrence p(n,r) = p(n,r-1) + p(n-r,r).
mpz_class count_restricted(unsigned n, unsigned r);

// Classical partition function via Euler's pentagonal-number recurrence.
mpz_class q(unsigned n);

// Hardy-Ramanujan approximation e^{pi sqrt(2n/3)} / (4 n sqrt(3)).
double hr_estimate(unsigned n);

}  // namespace pptower

#endif
