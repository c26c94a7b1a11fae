#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "strata/decompose.hpp"
#include "strata/enumerate.hpp"
#include "strata/fiber.hpp"
#include "strata/forest.hpp"
#include "strata/fs_module.hpp"
#include "strata/hilbert.hpp"
#include "strata/plethysm.hpp"
#include "strata/poset.hpp"
#include "strata/stable_graph.hpp"
#include "strata/verifiers.hpp"

namespace strata::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBudgetExceeded = 2,
    kBadInput = 3,
};

struct RunConfig {
    std::string command;
    std::string out_path;       // empty = stdout
    std::string format = "json";  // json | dot | text
    long long budget = Budget::default_budget();
    unsigned seed = 1;

    int g = 0, n = 0, i = 0, a = 0, e = 0;
    bool coarse_only = false;
    int max_dim = -1;
    std::string in_path;
    std::string module_path;
    int free_d = 0;
    int free_n = 0;
    int degree = 0;
    int to = 0;
    int upto = 12;
    int b_max = -1, b_min = -1;
    std::string coeffs;  // "r,s,t,u"
    std::string mode = "auto";
    int slack = 3;
};

struct RunResult {
    int exit_code = kOk;
    std::string output;  // primary artifact
    std::string error;   // one-line machine-parsable reason when nonzero
};

namespace detail_cli {

inline FCoeffs parse_coeffs(const std::string& s) {
    if (s.empty()) return FCoeffs{};
    FCoeffs c;
    std::istringstream in(s);
    char comma;
    if (!(in >> c.r >> comma >> c.s >> comma >> c.t >> comma >> c.u))
        throw std::invalid_argument("coeffs must be r,s,t,u");
    return c;
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

inline nlohmann::ordered_json coeffs_json(const FCoeffs& c) {
    return nlohmann::ordered_json{{"r", c.r}, {"s", c.s}, {"t", c.t}, {"u", c.u}};
}

inline nlohmann::ordered_json trichotomy_json(const TrichotomyReport& t) {
    nlohmann::ordered_json j;
    j["graph"] = t.graph_id;
    j["dim_exceeds"] = t.dim_exceeds;
    j["b_cherry"] = t.b_cherry;
    j["adjacent_b_pair"] = t.adjacent_b_pair;
    j["witness"] = t.witness;
    return j;
}

inline FSModule module_input(const RunConfig& cfg) {
    if (!cfg.module_path.empty()) return module_from_json(load_json_file(cfg.module_path));
    if (cfg.free_d > 0) {
        int N = cfg.free_n > 0 ? cfg.free_n : cfg.free_d;
        return free_module(cfg.free_d, N);
    }
    throw std::invalid_argument("need --module FILE or --free D [--N R]");
}

inline std::string module_desc(const RunConfig& cfg) {
    if (!cfg.module_path.empty()) return "file:" + cfg.module_path;
    return "free(" + std::to_string(cfg.free_d) + "," +
           std::to_string(cfg.free_n > 0 ? cfg.free_n : cfg.free_d) + ")";
}

} // namespace detail_cli

inline RunResult run(const RunConfig& cfg) {
    using nlohmann::ordered_json;
    RunResult res;
    try {
        Budget budget(cfg.budget);
        ordered_json out;
        out["command"] = cfg.command;
        out["seed"] = cfg.seed;
        std::string text;   // used by non-json formats
        bool raw = false;   // set when the artifact is a bare module file

        if (cfg.command == "enumerate") {
            EnumerateOptions opts;
            opts.coarse_only = cfg.coarse_only;
            opts.max_dimension = cfg.max_dim;
            auto classes = enumerate_stable_graphs(cfg.g, cfg.n, opts, &budget);
            out["g"] = cfg.g;
            out["n"] = cfg.n;
            out["coarse_only"] = cfg.coarse_only;
            out["max_dimension"] = cfg.max_dim;
            out["count"] = classes.size();
            auto arr = ordered_json::array();
            for (auto& [code, graph] : classes) {
                ordered_json c;
                c["id"] = code_id(code);
                c["dimension"] = stratum_dimension(graph);
                c["automorphisms"] = automorphism_group_order(graph);
                c["automorphisms_excluding_genus0_loops"] =
                    automorphism_group_order(graph, AutDesignation::ExcludeGenus0Loops);
                c["graph"] = graph_to_json(graph);
                arr.push_back(c);
                if (cfg.format == "dot") text += graph_to_dot(graph) + "\n";
                if (cfg.format == "text") text += code_id(code) + "\n";
            }
            out["classes"] = arr;
            if (cfg.format == "text")
                text = "count " + std::to_string(classes.size()) + "\n" + text;
        } else if (cfg.command == "coarsen") {
            StableGraph g = graph_from_json(detail_cli::load_json_file(cfg.in_path));
            auto v = validate(g);
            if (!v.ok) throw std::invalid_argument("input graph invalid: " + v.violation);
            StableGraph bar = coarsen(g);
            bool order_independent = true;
            for (unsigned k = 0; k < 3; ++k)
                if (canonical_code(coarsen_seeded(g, cfg.seed + k)) != canonical_code(bar))
                    order_independent = false;
            bool idempotent = canonical_code(coarsen(bar)) == canonical_code(bar);
            bool s_preserved = (s_vector(g) == s_vector(bar));
            out["input"] = graph_to_json(g);
            out["coarsened"] = graph_to_json(bar);
            out["s_vector"] = s_vector(bar);
            out["idempotent"] = idempotent;
            out["s_vector_preserved"] = s_preserved;
            out["order_independent"] = order_independent;
            if (!(idempotent && s_preserved && order_independent)) res.exit_code = kVerifyFailed;
            if (cfg.format == "dot") text = graph_to_dot(bar);
            if (cfg.format == "text") text = code_id(canonical_code(bar)) + "\n";
        } else if (cfg.command == "poset") {
            auto members = q_members(cfg.g, cfg.n, &budget);
            out["g"] = cfg.g;
            out["n"] = cfg.n;
            out["count"] = members.size();
            auto arr = ordered_json::array();
            std::vector<StableGraph> graphs;
            std::vector<std::string> ids;
            for (auto& [code, graph] : members) {
                ordered_json c;
                c["id"] = code_id(code);
                c["graph"] = graph_to_json(graph);
                arr.push_back(c);
                graphs.push_back(graph);
                ids.push_back(code_id(code));
            }
            out["members"] = arr;
            auto rel = ordered_json::array();
            for (size_t x = 0; x < graphs.size(); ++x)
                for (size_t y = 0; y < graphs.size(); ++y) {
                    if (x == y) continue;
                    if (q_less_or_equal(graphs[x], graphs[y], &budget))
                        rel.push_back(ordered_json{{"lower", ids[x]}, {"upper", ids[y]}});
                }
            out["relations"] = rel;
        } else if (cfg.command == "verify-lemma41") {
            auto rep = verify_lemma_41(cfg.g, cfg.i, detail_cli::parse_coeffs(cfg.coeffs), &budget);
            out["params"] = ordered_json{{"g", rep.g}, {"i", rep.i},
                                         {"coeffs", detail_cli::coeffs_json(rep.coeffs)},
                                         {"slack", cfg.slack}};
            out["bound"] = rep.bound;
            out["bound_kind"] = rep.bound_kind;
            out["max_n"] = rep.max_n;
            out["graphs_checked"] = rep.shapes_checked;
            auto per_n = ordered_json::object();
            for (auto& [n, c] : rep.per_n) per_n[std::to_string(n)] = c;
            out["per_n"] = per_n;
            out["all_pass"] = rep.all_pass;
            out["witnesses"] = ordered_json::array();
            if (!rep.all_pass) {
                out["witnesses"].push_back(ordered_json{{"max_shape_dot", rep.max_shape_dot}});
                res.exit_code = kVerifyFailed;
            }
        } else if (cfg.command == "verify-lemma42") {
            Lemma42Options opts;
            opts.coeffs = detail_cli::parse_coeffs(cfg.coeffs);
            if (cfg.mode == "direct") opts.mode = Lemma42Options::Mode::Direct;
            else if (cfg.mode == "violators") opts.mode = Lemma42Options::Mode::Violators;
            else if (cfg.mode == "auto") opts.mode = Lemma42Options::Mode::Auto;
            else throw std::invalid_argument("mode must be auto|direct|violators");
            if (cfg.b_max < 0 && opts.mode != Lemma42Options::Mode::Violators)
                throw std::invalid_argument("verify-lemma42 requires --b-max");
            auto rep = verify_lemma_42(cfg.a, cfg.e, cfg.i,
                                       cfg.b_max < 0 ? 0 : cfg.b_max, cfg.b_min, opts, &budget);
            out["params"] = ordered_json{{"a", rep.a}, {"e", rep.e}, {"i", rep.i},
                                         {"b_min", rep.b_min}, {"b_max", rep.b_max},
                                         {"coeffs", detail_cli::coeffs_json(opts.coeffs)},
                                         {"mode", cfg.mode}};
            out["threshold"] = rep.threshold;
            out["method"] = rep.method;
            out["vacuous_direct_range"] = rep.vacuous;
            out["graphs_checked"] = rep.graphs_checked;
            out["all_pass"] = rep.all_pass;
            auto sizes = ordered_json::object();
            for (auto& [b, c] : rep.fiber_sizes) sizes[std::to_string(b)] = c;
            out["fiber_sizes"] = sizes;
            if (rep.violator_b_cap >= 0) {
                out["violator_b_cap"] = rep.violator_b_cap;
                out["max_violating_b"] = rep.max_violating_b;
            }
            auto wit = ordered_json::array();
            for (auto& t : rep.failures) wit.push_back(detail_cli::trichotomy_json(t));
            for (auto& t : rep.samples) wit.push_back(detail_cli::trichotomy_json(t));
            out["witnesses"] = wit;
            out["reports_truncated"] = rep.reports_truncated;
            if (!rep.all_pass) res.exit_code = kVerifyFailed;
        } else if (cfg.command == "hilbert") {
            if (cfg.free_d < 1) throw std::invalid_argument("hilbert requires --free D >= 1");
            auto gf = free_hilbert_series(cfg.free_d);
            out["free"] = cfg.free_d;
            out["series"] = gf.str();
            auto coeffs = ordered_json::array();
            bool resum_ok = true;
            auto dec = poly_exp_decomposition(gf);
            for (int n = 0; n <= cfg.upto; ++n) {
                Rat c = coefficient(gf, n);
                coeffs.push_back(c.str());
                if (n > dec.polynomial_part.degree() && dec.eval(n) != c) resum_ok = false;
            }
            out["coefficients"] = coeffs;
            auto terms = ordered_json::array();
            for (auto& [j, f] : dec.terms) {
                auto poly = ordered_json::array();
                for (int d = 0; d <= f.degree(); ++d) poly.push_back(f.coeff(d).str());
                terms.push_back(ordered_json{{"base", j}, {"poly", poly}});
            }
            out["decomposition"] = terms;
            out["resummation_exact"] = resum_ok;
            if (!resum_ok) res.exit_code = kVerifyFailed;
            if (cfg.format == "text") {
                text = gf.str() + "\n";
                for (int n = 0; n <= cfg.upto; ++n)
                    text += (n ? "," : "") + coefficient(gf, n).str();
                text += "\n";
            }
        } else if (cfg.command == "decompose") {
            FSModule m = detail_cli::module_input(cfg);
            if (cfg.degree < 1) throw std::invalid_argument("decompose requires --degree >= 1");
            auto dec = decompose_degree(m, cfg.degree);
            out["module"] = detail_cli::module_desc(cfg);
            out["degree"] = cfg.degree;
            out["dimension"] = m.dim(cfg.degree);
            auto mult = ordered_json::object();
            for (auto& [p, c] : dec) mult[p.str()] = c;
            out["multiplicities"] = mult;
        } else if (cfg.command == "restrict") {
            FSModule m = detail_cli::module_input(cfg);
            if (cfg.to < 1) throw std::invalid_argument("restrict requires --to >= 1");
            FSModule r = restrict_module(m, cfg.to);
            res.output = module_to_json(r).dump(2) + "\n";
            raw = true;
        } else if (cfg.command == "induce") {
            FSModule m = detail_cli::module_input(cfg);
            if (cfg.to < m.max_degree())
                throw std::invalid_argument("induce requires --to >= the module degree");
            FSModule ind = induce_module(m, cfg.to);
            res.output = module_to_json(ind).dump(2) + "\n";
            raw = true;
        } else if (cfg.command == "bounds") {
            auto rep = bounds_report(cfg.g, cfg.i);
            out["entries"] = ordered_json::array();
            out["entries"].push_back(ordered_json{{"g", rep.g},
                                                  {"i", rep.i},
                                                  {"composed", rep.composed},
                                                  {"expanded", rep.expanded},
                                                  {"discrepancy", rep.discrepancy}});
            auto alt = alt_threshold_coeffs();
            out["threshold_coeffs"] = ordered_json{
                {"main", detail_cli::coeffs_json(FCoeffs{})},
                {"alternate", detail_cli::coeffs_json(alt)}};
            if (cfg.format == "text") {
                text = "g\ti\tcomposed\texpanded\tflag\n";
                text += std::to_string(rep.g) + "\t" + std::to_string(rep.i) + "\t" +
                        std::to_string(rep.composed) + "\t" + std::to_string(rep.expanded) +
                        "\t" + (rep.discrepancy ? "DISCREPANCY" : "ok") + "\n";
            }
        } else {
            throw std::invalid_argument("unknown command: " + cfg.command);
        }

        if (!raw) {
            if (cfg.format == "json") {
                res.output = out.dump(2) + "\n";
            } else if (cfg.format == "dot" || cfg.format == "text") {
                if (text.empty())
                    throw std::invalid_argument("format '" + cfg.format +
                                                "' not supported for " + cfg.command);
                res.output = text;
            } else {
                throw std::invalid_argument("unknown format: " + cfg.format);
            }
        }

        if (!cfg.out_path.empty()) {
            std::ofstream f(cfg.out_path);
            if (!f) throw std::invalid_argument("cannot write file: " + cfg.out_path);
            f << res.output;
            res.output.clear();
        }
        return res;
    } catch (const BudgetExceeded& ex) {
        res.exit_code = kBudgetExceeded;
        res.error = std::string("error: code=2 reason=") + ex.what();
        return res;
    } catch (const std::invalid_argument& ex) {
        res.exit_code = kBadInput;
        res.error = std::string("error: code=3 reason=") + ex.what();
        return res;
    } catch (const std::exception& ex) {
        res.exit_code = kVerifyFailed;
        res.error = std::string("error: code=1 reason=") + ex.what();
        return res;
    }
}

} // namespace strata::cli
