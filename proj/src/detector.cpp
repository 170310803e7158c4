#include "repdecomp/detector.hpp"

#include <algorithm>
#include <stdexcept>

#include "repdecomp/enumerate.hpp"

namespace repdecomp {

namespace {

constexpr std::size_t kDigestTerms = 8;

std::vector<std::pair<WeightVector, Int>> digest_terms(const Decomposition& d) {
    std::vector<std::pair<WeightVector, Int>> out;
    for (std::size_t i = 0; i < d.terms.size() && i < kDigestTerms; ++i)
        out.push_back(d.terms[i]);
    return out;
}

}  // namespace

std::string Functor::name() const {
    switch (kind) {
        case FunctorKind::TensorPower:
            return "tensor" + std::to_string(degree);
        case FunctorKind::SymPower:
            return "sym" + std::to_string(degree);
        case FunctorKind::ExtPower:
            return "ext" + std::to_string(degree);
    }
    return "?";
}

Functor Functor::parse(const std::string& text) {
    auto split = [&](const std::string& prefix, FunctorKind kind) -> std::optional<Functor> {
        if (text.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string rest = text.substr(prefix.size());
        if (rest.size() != 1 || rest[0] < '1' || rest[0] > '4') return std::nullopt;
        return Functor{kind, rest[0] - '0'};
    };
    for (auto& [prefix, kind] :
         std::initializer_list<std::pair<const char*, FunctorKind>>{
             {"tensor", FunctorKind::TensorPower},
             {"sym", FunctorKind::SymPower},
             {"ext", FunctorKind::ExtPower}}) {
        if (auto f = split(prefix, kind)) return *f;
    }
    throw std::invalid_argument("unknown functor '" + text +
                                "'; expected sym/ext/tensor with degree 1..4");
}

WeightVector dual_highest_weight(const Ambient& ambient, const WeightVector& w) {
    WeightVector out;
    std::size_t offset = 0;
    for (const auto& rs : ambient.factors) {
        WeightVector part(w.begin() + static_cast<long>(offset),
                          w.begin() + static_cast<long>(offset + static_cast<std::size_t>(rs.rank())));
        for (int& x : part) x = -x;
        part = rs.make_dominant(std::move(part));
        out.insert(out.end(), part.begin(), part.end());
        offset += static_cast<std::size_t>(rs.rank());
    }
    return out;
}

DetectionReport detect(const GroupSpec& g, Functor r) {
    DetectionReport report;
    report.group = g.label();
    report.functor = r.name();

    const Character rep = build_rep_character(g);
    report.rep_dimension = rep.total_multiplicity();
    report.rs_factorization =
        g.factors.size() == 2 && g.factors[0].dimension() == 3 && g.factors[1].dimension() == 3;

    const WeightVector zero(static_cast<std::size_t>(rep.ambient().total_rank()), 0);

    if (r.kind == FunctorKind::TensorPower) {
        // Trivial summands of tensor powers come in dual pairs of the
        // square: V_nu (x) V_xi contains the trivial exactly when xi is the
        // dual of nu, once each (Schur). For the irreducible input this
        // turns degree 2, 3, 4 into lookups in the decomposition of V (x) V.
        if (r.degree == 1) {
            Decomposition d = decompose(rep);
            report.trivial_mult = d.multiplicity_of(zero);
            report.digest_of = "V";
            report.decomposition_digest = digest_terms(d);
        } else {
            Decomposition square = decompose(tensor(rep, rep));
            report.digest_of = "V(x)V";
            report.decomposition_digest = digest_terms(square);
            switch (r.degree) {
                case 2:
                    report.trivial_mult = square.multiplicity_of(zero);
                    break;
                case 3:
                    report.trivial_mult = square.multiplicity_of(
                        dual_highest_weight(rep.ambient(), g.highest_weight()));
                    break;
                case 4: {
                    Int total = 0;
                    for (const auto& [nu, mult] : square.terms)
                        total += mult * square.multiplicity_of(
                                            dual_highest_weight(rep.ambient(), nu));
                    report.trivial_mult = total;
                    break;
                }
                default:
                    throw std::invalid_argument("tensor power degree must be 1..4");
            }
        }
    } else {
        Character image = (r.kind == FunctorKind::SymPower) ? sym_power(rep, r.degree)
                                                            : ext_power(rep, r.degree);
        Decomposition d = decompose(image);
        report.trivial_mult = d.multiplicity_of(zero);
        report.digest_of = "r(V)";
        report.decomposition_digest = digest_terms(d);
    }

    report.detected = report.trivial_mult >= 1;
    return report;
}

bool GL9Report::all_satisfy() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const GL9Entry& e) { return e.satisfies_conclusion; });
}

GL9Report classify_gl9() {
    GL9Report report;
    for (auto& spec : enumerate_irreps_of_dim(9)) {
        GL9Entry entry;
        entry.report = detect(spec, Functor{FunctorKind::SymPower, 3});
        const bool single_a1 =
            spec.factors.size() == 1 && spec.factors[0].rs.type_letter() == 'A' &&
            spec.factors[0].rs.rank() == 1;
        entry.satisfies_conclusion =
            !entry.report.detected || single_a1 || entry.report.rs_factorization;
        entry.spec = std::move(spec);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace repdecomp
