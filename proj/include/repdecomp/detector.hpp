#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repdecomp/group_spec.hpp"
#include "repdecomp/highest_weight.hpp"

namespace repdecomp {

enum class FunctorKind { TensorPower, SymPower, ExtPower };

/// The representation r applied to the defining representation: tensor-power,
/// symmetric or exterior power of degree <= 4.
struct Functor {
    FunctorKind kind = FunctorKind::SymPower;
    int degree = 3;

    std::string name() const;  // "sym3", "ext2", "tensor3", ...
    /// Parse "sym3" / "ext3" / "tensor3" etc.
    static Functor parse(const std::string& text);
};

struct DetectionReport {
    std::string group;
    std::string functor;
    Int rep_dimension;
    Int trivial_mult;
    bool detected = false;
    /// Set when the representation is an external tensor of two
    /// 3-dimensional factors (the Rankin-Selberg shape inside GL_9).
    bool rs_factorization = false;
    /// What the digest below decomposes: "r(V)" for symmetric/exterior
    /// powers, "V(x)V" for tensor powers (whose trivial multiplicity is
    /// located through dual-pair summands of the square).
    std::string digest_of;
    std::vector<std::pair<WeightVector, Int>> decomposition_digest;  // top terms
};

/// Decide whether the functor applied to the defining representation of g
/// contains a trivial summand, i.e. whether the subgroup fixes a line.
DetectionReport detect(const GroupSpec& g, Functor r);

/// Highest weight of the dual representation, factor by factor.
WeightVector dual_highest_weight(const Ambient& ambient, const WeightVector& w);

/// Classification of the irreducible 9-dimensional representations: every
/// entry of enumerate_irreps_of_dim(9) with its sym3 verdict, and whether
/// the verdict satisfies "detected implies (single A1 factor or
/// 3x3 tensor factorization)".
struct GL9Entry {
    GroupSpec spec;
    DetectionReport report;
    bool satisfies_conclusion = false;
};

struct GL9Report {
    std::vector<GL9Entry> entries;
    bool all_satisfy() const;
};

GL9Report classify_gl9();

// ---------------------------------------------------------------------------
// theorem-level verification drivers
// ---------------------------------------------------------------------------

/// Symmetric powers of SL_2 in GL_n under sym3, for n = 2..n_max, computed
/// both through the character pipeline and the closed-form plethysm
/// coefficient; the verdict must be "detected iff n = 1 mod 4" and the two
/// multiplicities must agree exactly.
struct A1Row {
    int n = 0;
    Int pipeline_mult;
    Int closed_form_mult;
    bool detected = false;
    bool expected = false;
    bool ok = false;
};

struct A1Report {
    std::vector<A1Row> rows;
    bool all_ok() const;
};

A1Report verify_theorem_a1(int n_max);

/// Symmetric powers of SL_3 under the tensor cube, k = 1..k_max: detection
/// must hold, with the dual partition (k,k) showing up as the i = 0 row of
/// the Pieri decomposition of Sym^k (x) Sym^k.
struct A2Row {
    int k = 0;
    Int rep_dimension;
    Int trivial_mult;
    Int witness_mult;       // multiplicity of the dual weight in V (x) V
    bool witness_in_pieri = false;
    bool ok = false;
};

struct A2Report {
    std::vector<A2Row> rows;
    bool all_ok() const;
};

A2Report verify_theorem_a2(int k_max);

/// Schur representations S_lambda(SL_m) under the tensor cube. For
/// m > 3*length(lambda) detection must fail (asserted); the band
/// length <= m <= 3*length is reported as data only.
struct SchurRow {
    std::string lambda;
    int m = 0;
    Int trivial_mult;
    bool detected = false;
    bool asserted = false;  // row lies in the m > 3*length region
    bool ok = false;        // asserted rows: !detected; exploratory rows: true
};

struct SchurReport {
    std::vector<SchurRow> rows;
    bool all_ok() const;
};

SchurReport verify_theorem_schur(int ell_max, int m_slack, int size_max);

/// Sym^m detection of the tensor-product embedding of SL_m x SL_m on
/// std (x) std, m in 1..3.
struct RSReport {
    int m = 0;
    Int trivial_mult;
    bool detected = false;
    bool ok = false;
};

RSReport verify_rs_detection(int m);

/// Closed-form plethysm against the character pipeline: the decomposition
/// of Sym^j(Sym^k) over SL_2 must agree as an exact multiset for
/// j in {2, 3} and k <= k_max.
struct PlethysmOracleRow {
    int j = 0;
    int k = 0;
    bool ok = false;
};

struct PlethysmOracleReport {
    std::vector<PlethysmOracleRow> rows;
    bool all_ok() const;
};

PlethysmOracleReport verify_plethysm_oracle(int k_max);

}  // namespace repdecomp
