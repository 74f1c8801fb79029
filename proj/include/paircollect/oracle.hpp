#pragma once

#include "paircollect/rational.hpp"

#include <cstdint>
#include <vector>

namespace paircollect::oracle {

// Ground truth by exhaustive enumeration over all n^len draw sequences.
// Events are indexed by the draw k at which they resolve (k = 2..len); the
// slot len+1 carries the unresolved ">len" mass so callers can compare only
// fully resolved events. Guarded to n <= 4, len <= 12.
struct EnumeratedLaws {
    int n = 0;
    int len = 0;
    std::uint64_t total = 0;  // n^len

    // first_pair_counts[j-1][k]: sequences whose first jj run ends at draw k.
    std::vector<std::vector<std::uint64_t>> first_pair_counts;

    // subset_counts[mask][k]: first run aa with symbol a in mask ends at k,
    // found by a direct scan (bookkeeping independent of first_pair_counts).
    std::vector<std::vector<std::uint64_t>> subset_counts;

    // joint_min_counts[mask][k]: the minimum over mask of the per-symbol
    // first-pair times equals k — the intersection route for joint tails.
    std::vector<std::vector<std::uint64_t>> joint_min_counts;

    BigRational prob_x(int j, int k) const;
    BigRational residual_x(int j) const;
    BigRational prob_subset(unsigned mask, int k) const;
    BigRational residual_subset(unsigned mask) const;

    // P{first pair over mask later than m}, m = 0..len, via the two routes.
    BigRational tail_subset(unsigned mask, int m) const;
    BigRational tail_joint(unsigned mask, int m) const;
};

EnumeratedLaws enumerate_laws(int n, int len);

// pmf(k) = (s_{k-1} - (n-j) s_{k-2}) / n^k for k = 2..k_max, evaluated from
// the second-order recurrence on s alone (rolling window, O(1) state).
std::vector<BigRational> recurrence_pmf_Y(int n, int j, std::int64_t k_max);

}  // namespace paircollect::oracle
