#include "catlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"catlab — exact combinatorics of d-Catalan trees: counting, sampling,\n"
                 "shuffle classes, H-weights, power-series inversion, span certificates\n"
                 "and p-shuffle chains. Outputs a single JSON (or CSV) document;\n"
                 "exit 0 = ok, 1 = domain error, 2 = cap exceeded."};
    app.require_subcommand(1);

    catlab::RunConfig config;
    if (const char* dir = std::getenv("CATLAB_CACHE_DIR")) config.cache_dir = dir;

    std::vector<unsigned> alpha;

    auto add_common = [&](CLI::App* sub, bool needs_d = true) {
        if (needs_d) sub->add_option("--d", config.d, "tree degree d >= 2");
        sub->add_option("--out", config.out_path, "output path (default stdout)");
        sub->add_option("--format", config.format, "json|csv");
        sub->add_option("--max-trees", config.max_trees, "enumeration cap");
        sub->add_option("--workers", config.workers, "parallel fan-out (output independent of N)");
        return sub;
    };
    auto add_table = [&](CLI::App* sub) {
        sub->add_option("--H", config.h_path, "coefficient table JSON file");
        sub->add_option("--H-inline", config.h_inline, "coefficient table JSON text");
    };
    auto add_offspring = [&](CLI::App* sub) {
        sub->add_option("--offspring", config.offspring_path, "offspring table JSON file");
        sub->add_option("--offspring-inline", config.offspring_inline,
                        "offspring table JSON text");
    };

    auto* count = add_common(app.add_subcommand("count", "d-Catalan number C_k^(d)"));
    count->add_option("--k", config.k)->required();

    auto* enumerate = add_common(app.add_subcommand("enumerate", "list C_k^(d) encodings"));
    enumerate->add_option("--k", config.k)->required();

    auto* sample = add_common(app.add_subcommand("sample", "uniform tree from C_k^(d)"));
    sample->add_option("--k", config.k)->required();
    sample->add_option("--seed", config.seed);

    auto* perfect = add_common(app.add_subcommand("perfect-stats", "p-perfect statistics"));
    perfect->add_option("--k", config.k)->required();
    perfect->add_option("--p", config.p)->required();
    perfect->add_option("--trials", config.trials);
    perfect->add_option("--seed", config.seed);
    perfect->add_flag("--exact", config.exact, "exhaustive Q instead of Monte-Carlo");

    auto* rootchildren =
        add_common(app.add_subcommand("rootchildren", "root-children leaf rate (exact + MC)"));
    rootchildren->add_option("--k", config.k)->required();
    rootchildren->add_option("--trials", config.trials);
    rootchildren->add_option("--seed", config.seed);

    auto* classes = add_common(app.add_subcommand("shuffle-classes", "length-p shuffle classes"));
    classes->add_option("--k", config.k)->required();
    classes->add_option("--p", config.p)->required();

    auto* span_check =
        add_common(app.add_subcommand("span-check", "is 1 in the span of class indicators"));
    span_check->add_option("--k", config.k)->required();
    span_check->add_option("--p", config.p)->required();

    auto* span_dim = add_common(app.add_subcommand("span-dim", "rank of the indicator matrix"));
    span_dim->add_option("--k", config.k)->required();
    span_dim->add_option("--p", config.p)->required();

    auto* span_dec =
        add_common(app.add_subcommand("span-decompose", "phi* as an explicit span combination"));
    span_dec->add_option("--k", config.k)->required();
    span_dec->add_option("--p", config.p)->required();

    auto* width = add_common(app.add_subcommand("width-fn", "psi, J_m, phi, phi* of one tree"));
    width->add_option("--enc", config.enc, "preorder 1/0 encoding")->required();
    width->add_option("--p", config.p)->required();

    auto* norms = add_common(app.add_subcommand("norms", "l1/linf of psi|phi|phistar vs 1"));
    norms->add_option("--k", config.k)->required();
    norms->add_option("--p", config.p)->required();
    norms->add_option("--which", config.which, "psi|phi|phistar");
    norms->add_flag("--sampled", config.sampled, "sampled mode with 99% radius");
    norms->add_option("--trials", config.trials);
    norms->add_option("--seed", config.seed);

    auto* invert = add_common(app.add_subcommand("invert", "inverse coefficient via the tree sum"),
                              false);
    add_table(invert);
    invert->add_option("--i", config.i);
    invert->add_option("--alpha", alpha, "multi-index, e.g. --alpha 0 2")->required();

    auto* oracle = add_common(
        app.add_subcommand("invert-oracle", "truncated compositional inverse of a series"), false);
    oracle->add_option("--F", config.series_path, "series JSON file");
    oracle->add_option("--F-inline", config.series_inline, "series JSON text");
    oracle->add_option("--D", config.degree_cap, "truncation degree (default: the input's)");

    auto* nilp = add_common(app.add_subcommand("nilpotent-check", "(JH)^p = 0, two routes"), false);
    add_table(nilp);
    nilp->add_option("--p", config.p)->required();

    auto* fern = add_common(app.add_subcommand("fern-sum", "Psi_{i,j}^alpha on the canonical fern"),
                            false);
    add_table(fern);
    fern->add_option("--p", config.p)->required();
    fern->add_option("--i", config.i);
    fern->add_option("--j", config.j);
    fern->add_option("--alpha", alpha)->required();

    auto* lemma = add_common(app.add_subcommand("shuffle-lemma", "per-class average H-weight sums"),
                             false);
    add_table(lemma);
    lemma->add_option("--k", config.k)->required();
    lemma->add_option("--p", config.p)->required();
    lemma->add_option("--i", config.i);
    lemma->add_option("--alpha", alpha)->required();

    auto* bounds = add_common(app.add_subcommand("bounds", "coefficient bound report"), false);
    add_table(bounds);
    bounds->add_option("--i", config.i);
    bounds->add_option("--alpha", alpha)->required();
    bounds->add_option("--deficit", config.deficit, "optional ||phi-1||_1 as num/den");

    auto* ck = add_common(app.add_subcommand("chain-kernel", "p-shuffle transition matrix"));
    ck->add_option("--k", config.k)->required();
    ck->add_option("--p", config.p)->required();

    auto* cs = add_common(app.add_subcommand("chain-stationary", "exact stationary distributions"));
    cs->add_option("--k", config.k)->required();
    cs->add_option("--p", config.p)->required();

    auto* cf = add_common(app.add_subcommand("chain-feasible", "uniform-stationarity LP"));
    cf->add_option("--k", config.k)->required();
    cf->add_option("--p", config.p)->required();
    cf->add_option("--max-lp-cells", config.max_lp_cells);

    auto* gws = add_common(app.add_subcommand("gw-sample", "multi-type Galton-Watson draw"), false);
    add_offspring(gws);
    gws->add_option("--root-type", config.root_type);
    gws->add_option("--seed", config.seed);
    gws->add_option("--vertex-cap", config.vertex_cap);

    auto* gwl = add_common(app.add_subcommand("gw-leaflaw", "leaf-type law vs d^alpha g"), false);
    add_offspring(gwl);
    gwl->add_option("--root-type", config.root_type);
    gwl->add_option("--alpha", alpha)->required();
    gwl->add_option("--trials", config.trials);
    gwl->add_option("--seed", config.seed);
    gwl->add_option("--vertex-cap", config.vertex_cap);

    auto* stirling = add_common(app.add_subcommand("stirling", "A_d and C_d to high precision"));
    stirling->add_option("--digits", config.digits);

    add_common(app.add_subcommand("verify-all", "run the acceptance battery"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Exit taxonomy: 1 for bad flags/subcommands (0 for --help and friends).
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    config.alpha = alpha;
    config.subcommand = app.get_subcommands().front()->get_name();
    return catlab::dispatch_and_emit(config);
}
