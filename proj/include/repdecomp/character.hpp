#pragma once

#include <map>
#include <string>
#include <vector>

#include "repdecomp/bigint.hpp"
#include "repdecomp/root_system.hpp"

namespace repdecomp {

/// Product of simple factors a character lives on. An empty factor list is
/// the trivial group (rank 0), whose characters are plain dimensions.
struct Ambient {
    std::vector<RootSystem> factors;

    int total_rank() const;
    std::string label() const;  // "A2xB4", "1" for the trivial group
    bool operator==(const Ambient& other) const;

    static Ambient product(const Ambient& a, const Ambient& b);
};

/// Finite mapping from weights (concatenated Dynkin coordinates) to exact
/// positive multiplicities. Immutable after construction.
class Character {
public:
    explicit Character(Ambient ambient) : ambient_(std::move(ambient)) {}
    Character(Ambient ambient, std::map<WeightVector, Int> weights);

    const Ambient& ambient() const { return ambient_; }
    const std::map<WeightVector, Int>& weights() const { return weights_; }

    Int total_multiplicity() const;
    Int multiplicity(const WeightVector& w) const;
    std::size_t support_size() const { return weights_.size(); }

    /// True when every simple reflection permutes the weight multiset.
    bool weyl_invariant() const;

private:
    Ambient ambient_;
    std::map<WeightVector, Int> weights_;  // strictly positive entries only
};

/// Weight-wise convolution; total multiplicity multiplies. Requires equal
/// ambients.
Character tensor(const Character& a, const Character& b);

/// Character on the product group: weights concatenate, multiplicities
/// multiply.
Character external_tensor(const Character& a, const Character& b);

/// Every weight negated.
Character dual(const Character& a);

/// Power operation p_k: every weight scaled by k, multiplicities kept.
Character adams(const Character& a, int k);

/// d-th symmetric power, d in 1..4, via the exact power-sum formulas
/// h2 = (p1^2+p2)/2, h3 = (p1^3+3p1p2+2p3)/6,
/// h4 = (p1^4+6p1^2p2+3p2^2+8p1p3+6p4)/24.
/// An inexact division signals that the input was not a character.
Character sym_power(const Character& a, int d);

/// d-th exterior power, d in 1..4; same formulas with signs
/// e2 = (p1^2-p2)/2, e3 = (p1^3-3p1p2+2p3)/6,
/// e4 = (p1^4-6p1^2p2+3p2^2+8p1p3-6p4)/24.
Character ext_power(const Character& a, int d);

/// The degree-3 hook component (p1^3 - p3)/3, so that
/// tensor-cube = sym_power(.,3) + ext_power(.,3) + 2 * hook_component.
Character hook_component_3(const Character& a);

}  // namespace repdecomp
