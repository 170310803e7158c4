#include "repdecomp/json_io.hpp"

namespace repdecomp {

namespace {

Json weight_json(const WeightVector& w) {
    Json j = Json::array();
    for (int x : w) j.push_back(x);
    return j;
}

Json terms_json(const std::vector<std::pair<WeightVector, Int>>& terms) {
    Json arr = Json::array();
    for (const auto& [w, m] : terms) {
        Json t;
        t["weight"] = weight_json(w);
        t["mult"] = m.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

Json to_json(const Decomposition& d) {
    Json j;
    j["terms"] = terms_json(d.terms);
    return j;
}

Json to_json(const SchurDecomp& d) {
    Json j;
    Json arr = Json::array();
    for (const auto& [p, m] : d.sorted_terms()) {
        Json t;
        Json parts = Json::array();
        for (int i = 0; i < p.length(); ++i) parts.push_back(p.part(static_cast<std::size_t>(i)));
        t["weight"] = std::move(parts);
        t["mult"] = m.str();
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

Json to_json(const DetectionReport& r) {
    Json j;
    j["group"] = r.group;
    j["functor"] = r.functor;
    j["rep_dimension"] = r.rep_dimension.str();
    j["trivial_mult"] = r.trivial_mult.str();
    j["detected"] = r.detected;
    j["rs_factorization"] = r.rs_factorization;
    j["digest_of"] = r.digest_of;
    j["terms"] = terms_json(r.decomposition_digest);
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["ell_max"] = r.ell_max;
    j["all_hold"] = r.all_hold();
    Json fails = Json::array();
    for (int ell : r.failing_ells) fails.push_back(ell);
    j["failing_ells"] = std::move(fails);
    Json rows = Json::array();
    for (const auto& chk : r.checks) {
        Json row;
        row["ell"] = chk.ell;
        row["p(4l,3,6l)"] = chk.p_4l_6l.str();
        row["p(4l,3,6l-1)"] = chk.p_4l_6lm1.str();
        row["p(4l-2,3,6l-3)"] = chk.p_4lm2_6lm3.str();
        row["p(4l-2,3,6l-4)"] = chk.p_4lm2_6lm4.str();
        row["ok"] = chk.difference_identity_holds && chk.equality_identity_holds;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const GL9Report& r) {
    Json j;
    j["all_satisfy"] = r.all_satisfy();
    Json rows = Json::array();
    for (const auto& e : r.entries) {
        Json row;
        row["group"] = e.spec.label();
        row["dimension"] = e.spec.dimension().str();
        row["detected"] = e.report.detected;
        row["trivial_mult"] = e.report.trivial_mult.str();
        row["rs_factorization"] = e.report.rs_factorization;
        row["satisfies_conclusion"] = e.satisfies_conclusion;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const A1Report& r) {
    Json j;
    j["all_ok"] = r.all_ok();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["n"] = row.n;
        x["pipeline_mult"] = row.pipeline_mult.str();
        x["closed_form_mult"] = row.closed_form_mult.str();
        x["detected"] = row.detected;
        x["expected"] = row.expected;
        x["ok"] = row.ok;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const A2Report& r) {
    Json j;
    j["all_ok"] = r.all_ok();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["k"] = row.k;
        x["rep_dimension"] = row.rep_dimension.str();
        x["trivial_mult"] = row.trivial_mult.str();
        x["witness_mult"] = row.witness_mult.str();
        x["witness_in_pieri"] = row.witness_in_pieri;
        x["ok"] = row.ok;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const SchurReport& r) {
    Json j;
    j["all_ok"] = r.all_ok();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["lambda"] = row.lambda;
        x["m"] = row.m;
        x["trivial_mult"] = row.trivial_mult.str();
        x["detected"] = row.detected;
        x["asserted"] = row.asserted;
        x["ok"] = row.ok;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const RSReport& r) {
    Json j;
    j["m"] = r.m;
    j["trivial_mult"] = r.trivial_mult.str();
    j["detected"] = r.detected;
    j["ok"] = r.ok;
    return j;
}

Decomposition decomposition_from_json(const Json& j, Ambient ambient) {
    Decomposition d;
    d.ambient = std::move(ambient);
    for (const auto& t : j.at("terms")) {
        WeightVector w;
        for (const auto& x : t.at("weight")) w.push_back(x.get<int>());
        d.terms.emplace_back(std::move(w), Int(t.at("mult").get<std::string>()));
    }
    return d;
}

SchurDecomp schur_decomp_from_json(const Json& j, int rank_m) {
    SchurDecomp d;
    d.rank_m = rank_m;
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts;
        for (const auto& x : t.at("weight")) parts.push_back(x.get<int>());
        d.terms.emplace(Partition(std::move(parts)), Int(t.at("mult").get<std::string>()));
    }
    return d;
}

}  // namespace repdecomp
