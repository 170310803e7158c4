#pragma once

#include <map>
#include <vector>

#include "repdecomp/bigint.hpp"
#include "repdecomp/character.hpp"
#include "repdecomp/partition.hpp"

namespace repdecomp {

/// Littlewood-Richardson coefficient C_{lambda,mu}^{nu}: the number of LR
/// skew tableaux of shape nu/lambda and content mu (rows weakly increasing,
/// columns strict, reverse reading word a lattice word). Zero when the
/// shapes are incompatible.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Tensor product decomposition as SL_m data: partitions are reported in
/// normalized form (columns of height m removed).
struct SchurDecomp {
    int rank_m = 0;
    std::map<Partition, Int> terms;

    Int multiplicity_of(const Partition& p) const;

    /// Terms in the stripping order of the corresponding dominant weights
    /// (height key descending, lexicographic tie-break).
    std::vector<std::pair<Partition, Int>> sorted_terms() const;
};

/// S_lambda (x) S_mu over SL_m via the LR rule. Rejects inputs with more
/// than m parts.
SchurDecomp tensor_decompose_lr(const Partition& lambda, const Partition& mu, int m);

/// The row case of Pieri's rule: Sym^k (x) Sym^k = (+)_{i=0..k} S_(k+i,k-i),
/// truncated to m rows. Requires k > 0, m >= 2.
SchurDecomp pieri_row(int k, int m);

/// Weight multiset of the Schur representation S_lambda of the standard
/// m-space, from semistandard tableaux: each tableau contributes its content
/// vector c in Dynkin coordinates a_i = c_i - c_{i+1}. Total multiplicity is
/// the hook-content dimension.
Character kostka_weights(const Partition& lambda, int m);

/// dim S_lambda(C^m) by the hook content formula, exactly.
Int hook_content_dimension(const Partition& lambda, int m);

/// All partitions of n with at most max_parts parts and parts at most
/// max_part, in descending lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// Dynkin coordinates of the SL_m highest weight attached to a partition
/// with at most m parts: a_i = lambda_i - lambda_{i+1}, i = 1..m-1.
WeightVector partition_to_weight(const Partition& lambda, int m);

/// Inverse of partition_to_weight up to normalization: the unique partition
/// with at most m-1 rows mapping to the given dominant weight.
Partition weight_to_partition(const WeightVector& w);

}  // namespace repdecomp
