#include <algorithm>
#include <map>
#include <stdexcept>

#include "repdecomp/detector.hpp"
#include "repdecomp/lr.hpp"
#include "repdecomp/sl2_plethysm.hpp"

namespace repdecomp {

bool A1Report::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const A1Row& r) { return r.ok; });
}

A1Report verify_theorem_a1(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_theorem_a1: n_max must be >= 2");
    A1Report report;
    const RootSystem a1 = RootSystem::make('A', 1);
    for (int n = 2; n <= n_max; ++n) {
        A1Row row;
        row.n = n;
        const int k = n - 1;
        row.pipeline_mult =
            trivial_multiplicity(sym_power(irreducible_character(a1, {k}), 3));
        row.closed_form_mult =
            (3 * k) % 2 == 0 ? plethysm_coefficient(3, k, 3 * k / 2) : Int(0);
        row.detected = row.pipeline_mult >= 1;
        row.expected = (n % 4 == 1);
        row.ok = (row.pipeline_mult == row.closed_form_mult) && (row.detected == row.expected);
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool A2Report::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const A2Row& r) { return r.ok; });
}

A2Report verify_theorem_a2(int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_theorem_a2: k_max must be >= 1");
    A2Report report;
    for (int k = 1; k <= k_max; ++k) {
        A2Row row;
        row.k = k;
        GroupSpec spec{{GroupFactor{RootSystem::make('A', 2), {k, 0}}}};
        DetectionReport det = detect(spec, Functor{FunctorKind::TensorPower, 3});
        row.rep_dimension = det.rep_dimension;
        row.trivial_mult = det.trivial_mult;

        // dual weight (0,k) is the partition (k,k); it must be the i = 0
        // row of the Pieri decomposition of Sym^k (x) Sym^k
        Character rep = build_rep_character(spec);
        Decomposition square = decompose(tensor(rep, rep));
        row.witness_mult = square.multiplicity_of({0, k});
        row.witness_in_pieri = pieri_row(k, 3).multiplicity_of(Partition{k, k}) == 1;

        row.ok = det.detected && row.witness_mult >= 1 && row.witness_in_pieri;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool SchurReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const SchurRow& r) { return r.ok; });
}

SchurReport verify_theorem_schur(int ell_max, int m_slack, int size_max) {
    if (ell_max < 1 || m_slack < 1 || size_max < 1)
        throw std::invalid_argument("verify_theorem_schur: all bounds must be >= 1");
    SchurReport report;
    for (int size = 1; size <= size_max; ++size) {
        for (const auto& lambda : partitions_of(size, size, size)) {
            const int ell = lambda.length();
            if (ell > ell_max) continue;
            // exploratory band ell <= m <= 3*ell (reported, never asserted),
            // then the asserted region 3*ell < m <= 3*ell + m_slack
            for (int m = std::max(2, ell); m <= 3 * ell + m_slack; ++m) {
                SchurRow row;
                row.lambda = lambda.to_string();
                row.m = m;
                GroupSpec spec{{GroupFactor{RootSystem::make('A', m - 1),
                                            partition_to_weight(lambda, m)}}};
                DetectionReport det = detect(spec, Functor{FunctorKind::TensorPower, 3});
                row.trivial_mult = det.trivial_mult;
                row.detected = det.detected;
                row.asserted = m > 3 * ell;
                row.ok = row.asserted ? !row.detected : true;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

bool PlethysmOracleReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const PlethysmOracleRow& r) { return r.ok; });
}

PlethysmOracleReport verify_plethysm_oracle(int k_max) {
    if (k_max < 0) throw std::invalid_argument("verify_plethysm_oracle: k_max must be >= 0");
    PlethysmOracleReport report;
    const RootSystem a1 = RootSystem::make('A', 1);
    for (int j = 2; j <= 3; ++j) {
        for (int k = 0; k <= k_max; ++k) {
            PlethysmOracleRow row{j, k, false};
            auto closed = sym_of_sym_sl2(j, k);
            Decomposition pipeline =
                decompose(sym_power(irreducible_character(a1, {k}), j));
            std::map<int, Int> from_pipeline;
            for (const auto& [w, m] : pipeline.terms) from_pipeline.emplace(w[0], m);
            row.ok = (closed == from_pipeline);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

RSReport verify_rs_detection(int m) {
    if (m < 1 || m > 3)
        throw std::invalid_argument("verify_rs_detection: m must be in 1..3");
    RSReport report;
    report.m = m;
    GroupSpec spec;
    WeightVector omega1(static_cast<std::size_t>(m - 1), 0);
    if (m >= 2) omega1[0] = 1;
    spec.factors.push_back(GroupFactor{RootSystem::make('A', m - 1), omega1});
    spec.factors.push_back(GroupFactor{RootSystem::make('A', m - 1), omega1});
    DetectionReport det = detect(spec, Functor{FunctorKind::SymPower, m == 1 ? 1 : m});
    report.trivial_mult = det.trivial_mult;
    report.detected = det.detected;
    report.ok = det.detected;
    return report;
}

}  // namespace repdecomp
