// Command-line front end: exact enumeration, coarsening and ordering of
// stable graphs, surjection-category module operations, Hilbert series, and
// the combinatorial bound verifiers. Emits JSON (schemas under schemas/),
// DOT, or text; all output is deterministic for a fixed config and seed.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "strata/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"strata - exact stable-graph and surjection-module toolkit"};
    app.require_subcommand(1);

    strata::cli::RunConfig cfg;
    cfg.budget = strata::Budget::default_budget();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "write the artifact to this path");
        sub->add_option("--format", cfg.format, "json | dot | text")->capture_default_str();
        sub->add_option("--budget", cfg.budget,
                        "enumeration budget (also via STRATA_BUDGET)")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for sampled self-checks")
            ->capture_default_str();
    };

    auto* enumerate = app.add_subcommand("enumerate", "stable graph classes of type (g,n)");
    enumerate->add_option("--g", cfg.g, "genus")->required();
    enumerate->add_option("--n", cfg.n, "number of labelled legs")->required();
    enumerate->add_flag("--coarse-only", cfg.coarse_only,
                        "restrict to coarsen-fixed graphs");
    enumerate->add_option("--max-dim", cfg.max_dim, "restrict stratum dimension");
    add_common(enumerate);

    auto* coarsen = app.add_subcommand("coarsen", "coarsen a graph file");
    coarsen->add_option("--in", cfg.in_path, "graph JSON file")->required();
    add_common(coarsen);

    auto* poset = app.add_subcommand("poset", "coarse poset of type (g,n) with relations");
    poset->add_option("--g", cfg.g, "genus")->required();
    poset->add_option("--n", cfg.n, "number of labelled legs")->required();
    add_common(poset);

    auto* l41 = app.add_subcommand("verify-lemma41", "leg-count bound verifier");
    l41->add_option("--g", cfg.g, "genus")->required();
    l41->add_option("--i", cfg.i, "valence parameter")->required();
    l41->add_option("--coeffs", cfg.coeffs, "threshold coefficients r,s,t,u");
    l41->add_option("--slack", cfg.slack, "extra leg range reported past the bound")
        ->capture_default_str();
    add_common(l41);

    auto* l42 = app.add_subcommand("verify-lemma42", "fiber trichotomy verifier");
    l42->add_option("--a", cfg.a, "class-a leg count")->required();
    l42->add_option("--e", cfg.e, "self edges of the coarse graph")->required();
    l42->add_option("--i", cfg.i, "dimension cut")->required();
    l42->add_option("--b-max", cfg.b_max, "largest class-b leg count to check");
    l42->add_option("--b-min", cfg.b_min, "smallest class-b leg count (default threshold+1)");
    l42->add_option("--coeffs", cfg.coeffs, "threshold coefficients r,s,t,u");
    l42->add_option("--mode", cfg.mode, "auto | direct | violators")->capture_default_str();
    add_common(l42);

    auto* hilbert = app.add_subcommand("hilbert", "free-module Hilbert series");
    hilbert->add_option("--free", cfg.free_d, "generator degree d")->required();
    hilbert->add_option("--upto", cfg.upto, "coefficients up to this degree")
        ->capture_default_str();
    add_common(hilbert);

    auto* decompose = app.add_subcommand("decompose",
                                         "symmetric-group decomposition of a module degree");
    decompose->add_option("--module", cfg.module_path, "module JSON file");
    decompose->add_option("--free", cfg.free_d, "use the free module on degree d");
    decompose->add_option("--N", cfg.free_n, "truncation degree for --free");
    decompose->add_option("--degree", cfg.degree, "degree to decompose")->required();
    add_common(decompose);

    auto* restr = app.add_subcommand("restrict", "truncate a module file");
    restr->add_option("--module", cfg.module_path, "module JSON file");
    restr->add_option("--free", cfg.free_d, "use the free module on degree d");
    restr->add_option("--N", cfg.free_n, "truncation degree for --free");
    restr->add_option("--to", cfg.to, "new truncation degree")->required();
    add_common(restr);

    auto* induce = app.add_subcommand("induce", "extend a module file by left Kan extension");
    induce->add_option("--module", cfg.module_path, "module JSON file")->required();
    induce->add_option("--to", cfg.to, "target truncation degree")->required();
    add_common(induce);

    auto* bounds = app.add_subcommand("bounds", "bound polynomial comparison table");
    bounds->add_option("--g", cfg.g, "genus")->required();
    bounds->add_option("--i", cfg.i, "homological parameter")->required();
    add_common(bounds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : strata::cli::kBadInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    auto result = strata::cli::run(cfg);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error << "\n";
    return result.exit_code;
}
