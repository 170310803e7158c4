#pragma once

#include <map>
#include <vector>

#include "repdecomp/character.hpp"

namespace repdecomp {

/// All dominant weights mu <= lambda (difference in the nonnegative root
/// lattice). Every such weight occurs in the irreducible with highest
/// weight lambda.
std::vector<WeightVector> dominant_weights_below(const RootSystem& rs,
                                                 const WeightVector& lambda);

/// Dominant part of the weight multiset of the irreducible with highest
/// weight lambda, by Freudenthal's recursion. All arithmetic is exact;
/// integrality of each multiplicity is asserted.
std::map<WeightVector, Int> dominant_multiplicities(const RootSystem& rs,
                                                    const WeightVector& lambda);

/// As above for a product group: per-factor tables combined multiplicatively.
std::map<WeightVector, Int> dominant_multiplicities(const Ambient& ambient,
                                                    const WeightVector& lambda);

/// Full weight multiset of the irreducible with highest weight lambda:
/// dominant multiplicities expanded over Weyl orbits. Total multiplicity
/// equals the Weyl dimension.
Character irreducible_character(const RootSystem& rs, const WeightVector& lambda);
Character irreducible_character(const Ambient& ambient, const WeightVector& lambda);

Int weyl_dimension(const Ambient& ambient, const WeightVector& lambda);

/// Result of highest-weight stripping: terms in stripping order (height
/// key descending, ties broken by lexicographically larger coordinates).
struct Decomposition {
    Ambient ambient;
    std::vector<std::pair<WeightVector, Int>> terms;

    Int multiplicity_of(const WeightVector& w) const;
    /// Sum of multiplicity x dimension over all terms.
    Int total_dimension() const;
};

/// Decompose a genuine character into irreducibles by repeatedly stripping
/// the maximal dominant weight. Only the dominant part of the input is
/// consumed; a negative multiplicity encountered on the way signals a
/// non-character input.
Decomposition decompose(const Character& a);

/// Multiplicity of the trivial summand, i.e. of the zero highest weight.
Int trivial_multiplicity(const Character& a);

/// Exact sum of multiplicity x irreducible_character over the terms.
Character reconstruct(const Decomposition& d);

}  // namespace repdecomp
