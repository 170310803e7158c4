#pragma once

#include <vector>

#include "repdecomp/group_spec.hpp"

namespace repdecomp {

/// Every irreducible representation of dimension d over the supported
/// simple root systems, plus every unordered two-factor product with both
/// factors nontrivial. The scan over Dynkin coordinates is finite because
/// the Weyl dimension is strictly increasing in each coordinate.
///
/// Only two-factor products are searched: the one composite dimension this
/// library needs, 9 = 3 x 3, has no split with three or more nontrivial
/// factors.
std::vector<GroupSpec> enumerate_irreps_of_dim(int d);

/// The simple-factor part of the scan: all (root system, dominant weight)
/// pairs of exactly dimension d, excluding the trivial weight.
std::vector<GroupFactor> enumerate_simple_irreps_of_dim(int d);

}  // namespace repdecomp
