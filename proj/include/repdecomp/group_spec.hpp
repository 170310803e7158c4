#pragma once

#include <string>
#include <vector>

#include "repdecomp/character.hpp"
#include "repdecomp/root_system.hpp"

namespace repdecomp {

/// One simple factor together with the dominant highest weight of its
/// representation.
struct GroupFactor {
    RootSystem rs;
    WeightVector highest;

    Int dimension() const;
};

/// A semisimple group given as a product of simple factors, acting by the
/// external tensor product of the factor representations (automatically
/// irreducible). An empty factor list is the trivial group.
struct GroupSpec {
    std::vector<GroupFactor> factors;

    Int dimension() const;
    Ambient ambient() const;
    WeightVector highest_weight() const;  // concatenated
    std::string label() const;            // e.g. "A2:[1,0];A2:[1,0]"

    /// Parse the factor grammar: semicolon-separated factors, each
    /// "<letter><rank>:[coords]" or "A<rank>:schur=(parts)".
    static GroupSpec parse(const std::string& text);
};

/// Character of the defining representation: external tensor of the factor
/// irreducibles.
Character build_rep_character(const GroupSpec& g);

}  // namespace repdecomp
