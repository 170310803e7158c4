#pragma once

#include <string>
#include <vector>

#include "repdecomp/bigint.hpp"

namespace repdecomp {

/// Weight in fundamental-weight (Dynkin) coordinates. For product groups
/// the per-factor coordinates are concatenated.
using WeightVector = std::vector<int>;

/// A positive root, stored both in simple-root coordinates and in Dynkin
/// coordinates, plus the vector pairing it against weights:
/// (x, root) = sum_j pairing[j] * x_j for x in Dynkin coordinates.
struct PositiveRoot {
    std::vector<int> simple_coords;
    WeightVector dynkin_coords;
    std::vector<long long> pairing;
    long long rho_pairing = 0;  // (rho, root)
};

/// Root system of one simple factor, built from its Cartan matrix.
/// Supported: A 1..8, B 2..4, C 2..4, D 4, G 2 (rank 0 stands for the
/// trivial factor). Every simple algebra with an irreducible of dimension
/// <= 9 is covered; the exceptional types E6/E7/E8/F4 have smallest
/// nontrivial dimensions 27/56/248/26 and are excluded.
class RootSystem {
public:
    /// cartan()[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
    static RootSystem make(char type_letter, int rank);

    char type_letter() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;  // e.g. "A2"

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
    const WeightVector& weyl_vector() const { return rho_; }

    bool dominant(const WeightVector& w) const;

    /// Simple reflection s_i applied to a weight.
    WeightVector reflect(const WeightVector& w, int i) const;

    /// The unique dominant weight in the Weyl orbit of w.
    WeightVector make_dominant(WeightVector w) const;

    /// Full Weyl orbit of a weight.
    std::vector<WeightVector> weyl_orbit(const WeightVector& w) const;

    /// Simple-root coordinates of a root-lattice element given in Dynkin
    /// coordinates. Throws if the element is not in the root lattice.
    std::vector<Int> simple_root_coords(const WeightVector& dynkin) const;

    /// det(cartan) times the sum of simple-root coordinates of w. Strictly
    /// monotone along the dominance order, which makes it a valid
    /// stripping key (Dynkin-coordinate sums are not: subtracting an
    /// interior simple root of A_3 leaves them unchanged).
    Int height_key(const WeightVector& w) const;

    bool operator==(const RootSystem& other) const {
        return type_ == other.type_ && rank_ == other.rank_;
    }

private:
    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> symmetrizer_;
    std::vector<PositiveRoot> positive_roots_;
    WeightVector rho_;
    std::vector<Int> height_row_;  // adj(cartan)^T * (1,...,1)
    Int cartan_det_ = 1;
};

/// Weyl dimension formula: prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha),
/// evaluated as an exact rational product; the result is integral.
/// Requires lambda dominant.
Int weyl_dimension(const RootSystem& rs, const WeightVector& lambda);

}  // namespace repdecomp
