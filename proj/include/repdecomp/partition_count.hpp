#pragma once

#include <string>
#include <vector>

#include "repdecomp/bigint.hpp"

namespace repdecomp {

/// p(k, j, n): the number of partitions of n into at most j parts with
/// largest part at most k. Computed by a dedicated dynamic program
/// (conditioning on the largest part), deliberately independent of the
/// Gaussian-polynomial recurrence so the two paths cross-validate.
Int count_bounded_partitions(int k, int j, int n);

/// One checked instance of the bounded-partition identities:
///   p(4l, 3, 6l) - p(4l, 3, 6l-1) = 1
///   p(4l-2, 3, 6l-3) = p(4l-2, 3, 6l-4)
struct IdentityCheck {
    int ell = 0;
    bool difference_identity_holds = false;  // p(4l,3,6l) - p(4l,3,6l-1) = 1
    bool equality_identity_holds = false;    // p(4l-2,3,6l-3) = p(4l-2,3,6l-4)
    Int p_4l_6l;
    Int p_4l_6lm1;
    Int p_4lm2_6lm3;
    Int p_4lm2_6lm4;
};

struct IdentityReport {
    int ell_max = 0;
    std::vector<IdentityCheck> checks;   // one per ell, 1..ell_max
    std::vector<int> failing_ells;       // expected empty
    bool all_hold() const { return failing_ells.empty(); }
};

/// Check both identities exactly for every 1 <= ell <= ell_max. Runs a
/// single incremental sweep over part sizes, so ell_max = 300 stays well
/// under a second.
IdentityReport verify_partition_identities(int ell_max);

}  // namespace repdecomp
