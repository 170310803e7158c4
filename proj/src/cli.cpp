#include "repdecomp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "repdecomp/detector.hpp"
#include "repdecomp/enumerate.hpp"
#include "repdecomp/errors.hpp"
#include "repdecomp/json_io.hpp"
#include "repdecomp/partition_count.hpp"
#include "repdecomp/properties.hpp"
#include "repdecomp/sl2_plethysm.hpp"

namespace repdecomp {

namespace {

std::string weight_str(const WeightVector& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

/// Left-justified fixed-width table; first row is the header.
void render_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
            os << (i + 1 == row.size() ? "" : "  ");
        }
        os << "\n";
    }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void render(std::ostream& os, const Decomposition& d) {
    std::vector<std::vector<std::string>> rows{{"weight", "mult"}};
    for (const auto& [w, m] : d.terms) rows.push_back({weight_str(w), m.str()});
    render_table(os, rows);
}

void render(std::ostream& os, const SchurDecomp& d) {
    std::vector<std::vector<std::string>> rows{{"partition", "mult"}};
    for (const auto& [p, m] : d.sorted_terms()) rows.push_back({p.to_string(), m.str()});
    render_table(os, rows);
}

void render(std::ostream& os, const DetectionReport& r) {
    os << "group:        " << r.group << "\n";
    os << "functor:      " << r.functor << "\n";
    os << "dimension:    " << r.rep_dimension.str() << "\n";
    os << "verdict:      " << (r.detected ? "detected" : "not detected")
       << ", trivial multiplicity " << r.trivial_mult.str() << "\n";
    if (r.rs_factorization)
        os << "shape:        external tensor of two 3-dimensional factors\n";
    os << "decomposition of " << r.digest_of << " (top terms):\n";
    std::vector<std::vector<std::string>> rows{{"  weight", "mult"}};
    for (const auto& [w, m] : r.decomposition_digest)
        rows.push_back({"  " + weight_str(w), m.str()});
    render_table(os, rows);
}

void render(std::ostream& os, const IdentityReport& r) {
    std::vector<std::vector<std::string>> rows{
        {"ell", "p(4l,3,6l)", "p(4l,3,6l-1)", "p(4l-2,3,6l-3)", "p(4l-2,3,6l-4)", "ok"}};
    for (const auto& c : r.checks)
        rows.push_back({std::to_string(c.ell), c.p_4l_6l.str(), c.p_4l_6lm1.str(),
                        c.p_4lm2_6lm3.str(), c.p_4lm2_6lm4.str(),
                        yesno(c.difference_identity_holds && c.equality_identity_holds)});
    render_table(os, rows);
    os << (r.all_hold() ? "all identities hold" : "FAILURES found") << " (ell_max="
       << r.ell_max << ")\n";
}

void render(std::ostream& os, const A1Report& r) {
    std::vector<std::vector<std::string>> rows{
        {"n", "pipeline", "closed-form", "detected", "expected", "ok"}};
    for (const auto& row : r.rows)
        rows.push_back({std::to_string(row.n), row.pipeline_mult.str(),
                        row.closed_form_mult.str(), yesno(row.detected),
                        yesno(row.expected), yesno(row.ok)});
    render_table(os, rows);
}

void render(std::ostream& os, const A2Report& r) {
    std::vector<std::vector<std::string>> rows{
        {"k", "dim", "trivial_mult", "witness_mult", "pieri_witness", "ok"}};
    for (const auto& row : r.rows)
        rows.push_back({std::to_string(row.k), row.rep_dimension.str(),
                        row.trivial_mult.str(), row.witness_mult.str(),
                        yesno(row.witness_in_pieri), yesno(row.ok)});
    render_table(os, rows);
}

void render(std::ostream& os, const SchurReport& r) {
    std::vector<std::vector<std::string>> rows{
        {"lambda", "m", "trivial_mult", "detected", "region", "ok"}};
    for (const auto& row : r.rows)
        rows.push_back({row.lambda, std::to_string(row.m), row.trivial_mult.str(),
                        yesno(row.detected), row.asserted ? "asserted" : "exploratory",
                        yesno(row.ok)});
    render_table(os, rows);
}

void render(std::ostream& os, const RSReport& r) {
    os << "m=" << r.m << "  trivial multiplicity " << r.trivial_mult.str() << "  "
       << (r.detected ? "detected" : "not detected") << "\n";
}

void render(std::ostream& os, const GL9Report& r) {
    std::vector<std::vector<std::string>> rows{
        {"group", "detected", "trivial_mult", "rs_shape", "conclusion"}};
    for (const auto& e : r.entries)
        rows.push_back({e.spec.label(), yesno(e.report.detected),
                        e.report.trivial_mult.str(), yesno(e.report.rs_factorization),
                        yesno(e.satisfies_conclusion)});
    render_table(os, rows);
}

void render(std::ostream& os, const PlethysmOracleReport& r) {
    std::vector<std::vector<std::string>> rows{{"j", "k", "ok"}};
    for (const auto& row : r.rows)
        rows.push_back({std::to_string(row.j), std::to_string(row.k), yesno(row.ok)});
    render_table(os, rows);
}

void render(std::ostream& os, const PropertyReport& r) {
    std::vector<std::vector<std::string>> rows{{"check", "ok", "detail"}};
    for (const auto& c : r.checks)
        rows.push_back({c.name, yesno(c.ok), c.detail});
    render_table(os, rows);
    os << "seed " << r.seed << "\n";
}

Json to_json(const PropertyReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["all_ok"] = r.all_ok();
    Json rows = Json::array();
    for (const auto& c : r.checks) {
        Json x;
        x["check"] = c.name;
        x["ok"] = c.ok;
        x["detail"] = c.detail;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const PlethysmOracleReport& r) {
    Json j;
    j["all_ok"] = r.all_ok();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["j"] = row.j;
        x["k"] = row.k;
        x["ok"] = row.ok;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    return j;
}

struct VerifyDefaults {
    int n_max = 13;
    int k_max = 6;           // a2
    int plethysm_k_max = 8;  // plethysm-oracle
    int ell_max_corollary = 300;
    int ell_max_schur = 4;
    int m_slack = 3;
    int size_max = 4;
};

/// Runs one named verification suite; returns (ok, rendered table, json).
struct SuiteResult {
    bool ok = false;
    std::string table;
    Json json;
};

SuiteResult run_suite(const std::string& name, const VerifyDefaults& cfg, std::uint64_t seed) {
    SuiteResult res;
    std::ostringstream os;
    if (name == "corollary") {
        auto r = verify_partition_identities(cfg.ell_max_corollary);
        res.ok = r.all_hold();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "a1") {
        auto r = verify_theorem_a1(cfg.n_max);
        res.ok = r.all_ok();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "plethysm-oracle") {
        auto r = verify_plethysm_oracle(cfg.plethysm_k_max);
        res.ok = r.all_ok();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "a2") {
        auto r = verify_theorem_a2(cfg.k_max);
        res.ok = r.all_ok();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "schur") {
        auto r = verify_theorem_schur(cfg.ell_max_schur, cfg.m_slack, cfg.size_max);
        res.ok = r.all_ok();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "rs") {
        res.ok = true;
        Json rows = Json::array();
        for (int m = 1; m <= 3; ++m) {
            auto r = verify_rs_detection(m);
            res.ok = res.ok && r.ok;
            render(os, r);
            rows.push_back(to_json(r));
        }
        res.json["rows"] = std::move(rows);
        res.json["all_ok"] = res.ok;
    } else if (name == "gl9") {
        auto r = classify_gl9();
        res.ok = r.all_satisfy();
        render(os, r);
        res.json = to_json(r);
    } else if (name == "properties") {
        auto r = run_property_suite(seed);
        res.ok = r.all_ok();
        render(os, r);
        res.json = to_json(r);
    } else {
        throw CLI::ValidationError("verify",
                                   "unknown suite '" + name +
                                       "'; expected one of corollary, a1, plethysm-oracle, "
                                       "a2, schur, rs, gl9, properties, all");
    }
    res.table = os.str();
    return res;
}

// Fixed execution order: later suites depend on machinery validated by the
// earlier ones.
const std::vector<std::string> kAllSuites = {"corollary", "a1", "plethysm-oracle", "a2",
                                             "schur",     "rs", "gl9",             "properties"};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact representation decompositions and invariant-line detection"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_file;
    std::uint64_t size_cap = 0;
    std::uint64_t seed = 12345;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_file, "write output to a file instead of stdout");
    app.add_option("--size-cap", size_cap, "character size cap (weight entries)");
    app.add_option("--seed", seed, "seed for the randomized property suite");

    auto* lr_cmd = app.add_subcommand("lr", "tensor product of two Schur representations of SL_m");
    std::string lambda_text, mu_text;
    int rank_m = 0;
    lr_cmd->add_option("lambda", lambda_text, "first partition, e.g. (2,1)")->required();
    lr_cmd->add_option("mu", mu_text, "second partition")->required();
    lr_cmd->add_option("--rank", rank_m, "the m of SL_m")->required();

    auto* plethysm_cmd =
        app.add_subcommand("plethysm", "decomposition of Sym^j(Sym^k) over SL_2");
    int pj = 0, pk = 0;
    plethysm_cmd->add_option("j", pj)->required();
    plethysm_cmd->add_option("k", pk)->required();

    auto* partitions_cmd =
        app.add_subcommand("partitions", "count partitions of n with at most j parts, parts <= k");
    int ck = 0, cj = 0, cn = 0;
    partitions_cmd->add_option("k", ck)->required();
    partitions_cmd->add_option("j", cj)->required();
    partitions_cmd->add_option("n", cn)->required();

    auto* enum_cmd =
        app.add_subcommand("enumerate-dim", "all irreducible representations of a dimension");
    int enum_d = 0;
    enum_cmd->add_option("d", enum_d)->required();

    auto* detect_cmd = app.add_subcommand("detect", "decide line detection for one group");
    std::string group_text, functor_text;
    detect_cmd->add_option("--group", group_text, "factors, e.g. \"A2:[1,0];A2:[1,0]\" or"
                                                  " \"A3:schur=(2,1)\"")
        ->required();
    detect_cmd
        ->add_option("--functor", functor_text, "sym2..4, ext2..4 or tensor2..4")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int n_max = -1, k_max = -1, ell_max = -1, m_slack = -1, size_max = -1;
    verify_cmd
        ->add_option("suite", suite,
                     "corollary | a1 | plethysm-oracle | a2 | schur | rs | gl9 | properties | all")
        ->required();
    verify_cmd->add_option("--n-max", n_max, "a1: largest n (default 13)");
    verify_cmd->add_option("--k-max", k_max, "a2 / plethysm-oracle: largest k");
    verify_cmd->add_option("--l-max", ell_max, "corollary: 300; schur: 4");
    verify_cmd->add_option("--m-slack", m_slack, "schur: width of the asserted band (default 3)");
    verify_cmd->add_option("--size-max", size_max, "schur: largest |lambda| (default 4)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (const char* env = std::getenv("REPDECOMP_SIZE_CAP")) {
        try {
            set_character_size_cap(std::stoull(env));
        } catch (const std::exception&) {
            err << "usage error: REPDECOMP_SIZE_CAP must be a positive integer\n";
            return 2;
        }
    }
    if (size_cap > 0) set_character_size_cap(size_cap);

    std::ostringstream body;
    int exit_code = 0;
    const bool json = (format == "json");

    try {
        if (*lr_cmd) {
            auto d = tensor_decompose_lr(parse_partition(lambda_text),
                                         parse_partition(mu_text), rank_m);
            if (json)
                body << to_json(d).dump(2) << "\n";
            else
                render(body, d);
        } else if (*plethysm_cmd) {
            auto terms = sym_of_sym_sl2(pj, pk);
            if (json) {
                Json j;
                Json arr = Json::array();
                for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
                    Json t;
                    t["weight"] = Json::array({it->first});
                    t["mult"] = it->second.str();
                    arr.push_back(std::move(t));
                }
                j["terms"] = std::move(arr);
                body << j.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> rows{{"weight", "mult"}};
                for (auto it = terms.rbegin(); it != terms.rend(); ++it)
                    rows.push_back({"[" + std::to_string(it->first) + "]", it->second.str()});
                render_table(body, rows);
            }
        } else if (*partitions_cmd) {
            Int c = count_bounded_partitions(ck, cj, cn);
            if (json) {
                Json j;
                j["k"] = ck;
                j["j"] = cj;
                j["n"] = cn;
                j["count"] = c.str();
                body << j.dump(2) << "\n";
            } else {
                body << c.str() << "\n";
            }
        } else if (*enum_cmd) {
            auto entries = enumerate_irreps_of_dim(enum_d);
            if (json) {
                Json j;
                j["dimension"] = enum_d;
                Json arr = Json::array();
                for (const auto& e : entries) arr.push_back(e.label());
                j["entries"] = std::move(arr);
                body << j.dump(2) << "\n";
            } else {
                std::vector<std::vector<std::string>> rows{{"group"}};
                for (const auto& e : entries) rows.push_back({e.label()});
                render_table(body, rows);
                body << entries.size() << " representations of dimension " << enum_d << "\n";
            }
        } else if (*detect_cmd) {
            auto report = detect(GroupSpec::parse(group_text), Functor::parse(functor_text));
            if (json)
                body << to_json(report).dump(2) << "\n";
            else
                render(body, report);
        } else if (*verify_cmd) {
            VerifyDefaults cfg;
            if (n_max > 0) cfg.n_max = n_max;
            if (k_max > 0) {
                cfg.k_max = k_max;
                cfg.plethysm_k_max = k_max;
            }
            if (ell_max > 0) {
                cfg.ell_max_corollary = ell_max;
                cfg.ell_max_schur = ell_max;
            }
            if (m_slack > 0) cfg.m_slack = m_slack;
            if (size_max > 0) cfg.size_max = size_max;

            const std::vector<std::string> suites =
                (suite == "all") ? kAllSuites : std::vector<std::string>{suite};
            bool all_ok = true;
            Json all_json;
            for (const auto& name : suites) {
                SuiteResult res = run_suite(name, cfg, seed);
                all_ok = all_ok && res.ok;
                if (json) {
                    all_json[name] = std::move(res.json);
                } else {
                    body << "== " << name << " ==\n"
                         << res.table << "suite " << name << ": "
                         << (res.ok ? "PASS" : "FAIL") << "\n\n";
                }
            }
            if (json) {
                all_json["all_ok"] = all_ok;
                body << all_json.dump(2) << "\n";
            } else {
                body << (all_ok ? "ALL SUITES PASS" : "SUITE FAILURES FOUND") << "\n";
            }
            exit_code = all_ok ? 0 : 1;
        }
    } catch (const size_cap_error& e) {
        err << "size-cap error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) {
            err << "cannot open output file '" << out_file << "'\n";
            return 2;
        }
        f << body.str();
    } else {
        out << body.str();
    }
    return exit_code;
}

}  // namespace repdecomp
