#include "catlab/cli.hpp"

#include "catlab/acceptance.hpp"
#include "catlab/chain.hpp"
#include "catlab/inversion.hpp"
#include "catlab/json_io.hpp"
#include "catlab/sampler.hpp"
#include "catlab/span_lab.hpp"
#include "catlab/stats.hpp"
#include "catlab/weights.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace catlab {

namespace {

Json base_doc(const RunConfig& config) {
    Json doc;
    doc["schema"] = "catlab/" + config.subcommand + "/1";
    doc["version"] = kVersionTag;
    return doc;
}

CoefficientTable load_table(const RunConfig& config) {
    if (!config.h_inline.empty()) return table_from_json(parse_json_text(config.h_inline));
    if (!config.h_path.empty()) return table_from_json(load_json_file(config.h_path));
    throw InvalidParameterError("this subcommand needs a coefficient table (--H or --H-inline)");
}

TruncatedSeriesMap load_series(const RunConfig& config) {
    if (!config.series_inline.empty()) return series_from_json(parse_json_text(config.series_inline));
    if (!config.series_path.empty()) return series_from_json(load_json_file(config.series_path));
    throw InvalidParameterError("this subcommand needs a series (--F or --F-inline)");
}

OffspringDistribution load_offspring(const RunConfig& config) {
    if (!config.offspring_inline.empty())
        return offspring_from_json(parse_json_text(config.offspring_inline));
    if (!config.offspring_path.empty())
        return offspring_from_json(load_json_file(config.offspring_path));
    throw InvalidParameterError(
        "this subcommand needs an offspring table (--offspring or --offspring-inline)");
}

MultiIndex alpha_of(const RunConfig& config) {
    if (config.alpha.empty()) throw InvalidParameterError("--alpha is required");
    return MultiIndex(config.alpha);
}

int index_0based(int one_based, int n, const char* what) {
    if (one_based < 1 || one_based > n)
        throw InvalidParameterError(std::string(what) + " must lie in 1..n");
    return one_based - 1;
}

std::optional<Rat> deficit_of(const RunConfig& config) {
    if (config.deficit.empty()) return std::nullopt;
    try {
        auto slash = config.deficit.find('/');
        if (slash == std::string::npos) return Rat(Int(config.deficit));
        return make_rat(config.deficit.substr(0, slash), config.deficit.substr(slash + 1));
    } catch (const std::invalid_argument&) {
        throw InvalidParameterError("--deficit must be an integer or num/den");
    }
}

Json lambda_json(const std::vector<std::pair<std::string, Rat>>& lambda) {
    Json arr = Json::array();
    for (const auto& [key, value] : lambda) {
        Json e;
        e["key"] = key;
        e["num"] = value.get_num().get_str();
        e["den"] = value.get_den().get_str();
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string doc_count(const RunConfig& config, Json& doc) {
    Int value = catalan_number(config.d, config.k);
    if (config.format == "csv") {
        std::ostringstream csv;
        csv << "d,k,value\n" << config.d << "," << config.k << "," << value.get_str() << "\n";
        return csv.str();
    }
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["value"] = value.get_str();
    return {};
}

std::string doc_enumerate(const RunConfig& config, Json& doc) {
    require_within_cap(config.d, config.k, config.max_trees);
    if (config.format == "csv") {
        std::ostringstream csv;
        csv << "enc\n";
        for_each_tree_encoding(config.d, config.k,
                               [&](const std::string& enc) { csv << enc << "\n"; });
        return csv.str();
    }
    doc["d"] = config.d;
    doc["k"] = config.k;
    Json trees = Json::array();
    for_each_tree_encoding(config.d, config.k,
                           [&](const std::string& enc) { trees.push_back(enc); });
    doc["count"] = trees.size();
    doc["trees"] = std::move(trees);
    return {};
}

void doc_sample(const RunConfig& config, Json& doc) {
    CatalanTree tree = sample_uniform(config.d, config.k, config.seed);
    doc["seed"] = config.seed;
    doc["tree"] = tree_json(tree);
}

void doc_perfect_stats(const RunConfig& config, Json& doc) {
    doc["d"] = config.d;
    doc["p"] = config.p;
    doc["k"] = config.k;
    if (config.exact) {
        Rat q = exact_Q(config.d, config.p, config.k, config.max_trees);
        doc["exact_rate"] = rat_json(q);
    } else {
        PerfectStats stats =
            estimate_Q(config.d, config.p, config.k, config.trials, config.seed, config.workers);
        doc["trials"] = stats.trials;
        doc["seed"] = stats.seed;
        doc["hits"] = stats.hits;
        doc["rate"] = rat_json(stats.rate);
    }
    doc["kappa_approx"] = kappa_pd(config.p, config.d);
    doc["bound_approx"] = perfect_bound(config.p, config.d, config.k);
}

void doc_rootchildren(const RunConfig& config, Json& doc) {
    RootChildrenRate rate = rootchildren_leaf_rate(config.d, config.k, config.trials, config.seed,
                                                   config.workers);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["exact"] = rat_json(rate.exact);
    doc["limit"] = rat_json(rate.limit);
    doc["trials"] = rate.trials;
    doc["seed"] = rate.seed;
    doc["hits"] = rate.hits;
    doc["empirical"] = rat_json(rate.empirical);
}

void doc_shuffle_classes(const RunConfig& config, Json& doc) {
    ShuffleClassSet set = enumerate_shuffle_classes(config.d, config.k, config.p, config.max_trees);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    Json classes = Json::array();
    for (const auto& [key, cls] : set.classes) {
        Json c;
        c["key"] = key;
        c["size"] = cls.members.size();
        Json members = Json::array();
        for (const auto& enc : cls.members) members.push_back(enc);
        c["members"] = std::move(members);
        classes.push_back(std::move(c));
    }
    doc["count"] = classes.size();
    doc["classes"] = std::move(classes);
}

void doc_span_check(const RunConfig& config, Json& doc) {
    SpanCertificate cert = span_membership(config.d, config.k, config.p, config.max_trees);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["status"] = cert.member ? "member" : "non-member";
    doc["rank"] = cert.rank;
    doc["columns"] = cert.columns;
    if (cert.member) {
        doc["lambda"] = lambda_json(cert.lambda);
    } else {
        Json w = Json::array();
        for (const Rat& v : cert.witness) w.push_back(rat_json(v));
        doc["witness"] = std::move(w);
        Json encs = Json::array();
        for (const auto& enc : cert.tree_encodings) encs.push_back(enc);
        doc["trees"] = std::move(encs);
    }
}

void doc_span_dim(const RunConfig& config, Json& doc) {
    SpanDimension dim = span_dimension(config.d, config.k, config.p, config.max_trees);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["rank"] = dim.rank;
    doc["ambient"] = dim.ambient.get_str();
    doc["columns"] = dim.columns;
    doc["full_span"] = dim.ambient == dim.rank;
}

void doc_width_fn(const RunConfig& config, Json& doc) {
    if (config.enc.empty()) throw InvalidParameterError("width-fn needs --enc");
    CatalanTree tree = CatalanTree::parse(config.d, config.enc);
    WidthRecord rec = width_functions(tree, config.p);
    doc["d"] = config.d;
    doc["p"] = config.p;
    doc["enc"] = config.enc;
    doc["k"] = tree.internal_count();
    doc["psi"] = rat_json(rec.psi);
    Json jvals = Json::array();
    for (const Rat& v : rec.j_values) jvals.push_back(rat_json(v));
    doc["J"] = std::move(jvals);
    doc["J_constant_tail"] = rec.j_constant_tail;
    doc["phi"] = rat_json(rec.phi);
    doc["phi_star"] = rat_json(rec.phi_star);
    doc["perfect"] = rec.perfect;
}

WidthWhich which_of(const RunConfig& config) {
    if (config.which == "psi") return WidthWhich::Psi;
    if (config.which == "phi") return WidthWhich::Phi;
    if (config.which == "phistar") return WidthWhich::PhiStar;
    throw InvalidParameterError("--which must be psi, phi or phistar");
}

void doc_norms(const RunConfig& config, Json& doc) {
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["which"] = config.which;
    if (config.sampled) {
        SampledNorms est = approximation_norms_sampled(config.d, config.k, config.p,
                                                       which_of(config), config.trials,
                                                       config.seed, config.workers);
        doc["mode"] = "sampled";
        doc["trials"] = est.trials;
        doc["seed"] = est.seed;
        doc["l1_estimate"] = rat_json(est.l1_estimate);
        doc["l1_estimate_approx"] = est.l1_estimate.get_d();
        doc["radius99_approx"] = est.radius99;
        doc["linf_seen"] = rat_json(est.linf_seen);
        doc["linf_seen_approx"] = est.linf_seen.get_d();
    } else {
        NormsRecord norms =
            approximation_norms(config.d, config.k, config.p, which_of(config), config.max_trees);
        doc["mode"] = "exact";
        doc["l1"] = rat_json(norms.l1);
        doc["l1_approx"] = norms.l1.get_d();
        doc["linf"] = rat_json(norms.linf);
        doc["linf_approx"] = norms.linf.get_d();
    }
}

void doc_span_decompose(const RunConfig& config, Json& doc) {
    PhiStarDecomposition dec =
        span_decomposition_of_phi_star(config.d, config.k, config.p, config.max_trees);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["lambda"] = lambda_json(dec.lambda);
    doc["residual_zero"] = dec.residual_zero;
    Json residual = Json::array();
    for (const Rat& r : dec.residual) residual.push_back(rat_json(r));
    doc["residual"] = std::move(residual);
}

void doc_invert(const RunConfig& config, Json& doc) {
    CoefficientTable table = load_table(config);
    MultiIndex alpha = alpha_of(config);
    int i = index_0based(config.i, table.n, "--i");
    Rat g = inverse_coefficient(table, i, alpha, config.max_trees);
    doc["i"] = config.i;
    doc["alpha"] = multi_index_json(alpha);
    doc["g"] = rat_json(g);
}

void doc_invert_oracle(const RunConfig& config, Json& doc) {
    TruncatedSeriesMap f = load_series(config);
    unsigned long cap = config.degree_cap > 0 ? config.degree_cap : f.degree_cap;
    TruncatedSeriesMap g = truncated_inverse(f, cap);
    doc["series"] = series_json(g);
}

void doc_nilpotent_check(const RunConfig& config, Json& doc) {
    CoefficientTable table = load_table(config);
    bool identity = nilpotency_identity_holds(table, config.p);
    bool symbolic = jacobian_power_is_zero(table, config.p);
    doc["p"] = config.p;
    doc["identity_route"] = identity;
    doc["symbolic_route"] = symbolic;
    doc["agree"] = identity == symbolic;
    doc["nilpotent"] = identity && symbolic;
}

void doc_fern_sum(const RunConfig& config, Json& doc) {
    CoefficientTable table = load_table(config);
    MultiIndex alpha = alpha_of(config);
    int i = index_0based(config.i, table.n, "--i");
    int j = index_0based(config.j, table.n, "--j");
    Rat psi = fern_sum(i, j, alpha, table, config.p);
    doc["i"] = config.i;
    doc["j"] = config.j;
    doc["p"] = config.p;
    doc["alpha"] = multi_index_json(alpha);
    doc["psi"] = rat_json(psi);
}

void doc_shuffle_lemma(const RunConfig& config, Json& doc) {
    CoefficientTable table = load_table(config);
    MultiIndex alpha = alpha_of(config);
    int i = index_0based(config.i, table.n, "--i");
    ClassSumReport report =
        shuffle_lemma_check(table, config.p, config.k, i, alpha, config.max_trees);
    doc["d"] = table.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["i"] = config.i;
    doc["alpha"] = multi_index_json(alpha);
    doc["all_zero"] = report.all_zero;
    Json sums = Json::array();
    for (const auto& [key, value] : report.sums) {
        Json e;
        e["key"] = key;
        e["num"] = value.get_num().get_str();
        e["den"] = value.get_den().get_str();
        sums.push_back(std::move(e));
    }
    doc["class_sums"] = std::move(sums);
}

void doc_bounds(const RunConfig& config, Json& doc) {
    CoefficientTable table = load_table(config);
    MultiIndex alpha = alpha_of(config);
    int i = index_0based(config.i, table.n, "--i");
    BoundReport report =
        coefficient_bound_report(table, i, alpha, deficit_of(config), config.max_trees);
    doc["i"] = config.i;
    doc["alpha"] = multi_index_json(alpha);
    doc["k"] = report.k;
    doc["g"] = rat_json(report.g);
    doc["abs_g"] = rat_json(report.g_abs);
    doc["L"] = rat_json(report.l_value);
    doc["bound"] = rat_json(report.bound);
    doc["holds"] = report.holds;
    if (report.deficit) {
        doc["deficit"] = rat_json(*report.deficit);
        doc["refined_bound"] = rat_json(*report.refined_bound);
        doc["refined_holds"] = *report.refined_holds;
    }
}

Json kernel_doc(const ShuffleKernel& kernel) {
    Json j;
    j["d"] = kernel.d;
    j["k"] = kernel.k;
    j["p"] = kernel.p;
    Json encs = Json::array();
    for (const auto& enc : kernel.tree_encodings) encs.push_back(enc);
    j["trees"] = std::move(encs);
    Json rows = Json::array();
    for (const auto& row : kernel.matrix) {
        Json r = Json::array();
        for (const Rat& v : row) r.push_back(rat_json(v));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

void doc_chain_kernel(const RunConfig& config, Json& doc) {
    ShuffleKernel kernel = build_kernel(config.d, config.k, config.p, config.max_trees);
    doc["kernel"] = kernel_doc(kernel);
}

void doc_chain_stationary(const RunConfig& config, Json& doc) {
    ShuffleKernel kernel = build_kernel(config.d, config.k, config.p, config.max_trees);
    std::vector<StationaryClass> classes = stationary_distribution(kernel);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["irreducible"] = classes.size() == 1;
    Json arr = Json::array();
    for (const StationaryClass& cls : classes) {
        Json c;
        Json states = Json::array();
        for (int s : cls.states) states.push_back(kernel.tree_encodings[s]);
        c["states"] = std::move(states);
        Json pi = Json::array();
        for (const Rat& v : cls.pi) pi.push_back(rat_json(v));
        c["pi"] = std::move(pi);
        arr.push_back(std::move(c));
    }
    doc["classes"] = std::move(arr);
}

void doc_chain_feasible(const RunConfig& config, Json& doc) {
    FeasibilityResult result =
        uniform_feasibility(config.d, config.k, config.p, config.max_trees, config.max_lp_cells);
    doc["d"] = config.d;
    doc["k"] = config.k;
    doc["p"] = config.p;
    doc["feasible"] = result.feasible;
    if (result.feasible) {
        Json rule = Json::array();
        for (std::size_t t = 0; t < result.tree_encodings.size(); ++t) {
            Json e;
            e["enc"] = result.tree_encodings[t];
            Json vs = Json::array();
            CatalanTree tree = CatalanTree::parse(config.d, result.tree_encodings[t]);
            for (const auto& [v, mass] : result.rule.masses[t]) {
                Json m;
                m["code"] = code_to_string(tree.code(v));
                m["num"] = mass.get_num().get_str();
                m["den"] = mass.get_den().get_str();
                vs.push_back(std::move(m));
            }
            e["vertices"] = std::move(vs);
            rule.push_back(std::move(e));
        }
        doc["rule"] = std::move(rule);
        doc["verified_uniform"] = true; // build_kernel re-verification ran
    } else {
        Json y = Json::array();
        for (const Rat& v : result.farkas) y.push_back(rat_json(v));
        doc["farkas"] = std::move(y);
    }
}

void doc_gw_sample(const RunConfig& config, Json& doc) {
    OffspringDistribution offspring = load_offspring(config);
    int root = index_0based(config.root_type, offspring.n, "--root-type");
    Rng rng(config.seed);
    GwSample sample = sample_gw_multitype(offspring, root, rng, config.vertex_cap);
    doc["seed"] = config.seed;
    doc["root_type"] = config.root_type;
    doc["vertex_cap"] = config.vertex_cap;
    if (sample.cap_exceeded) {
        doc["outcome"] = "cap-exceeded";
    } else {
        doc["outcome"] = "finite";
        Json arity = Json::array();
        Json types = Json::array();
        for (int v = 0; v < sample.tree.size(); ++v) {
            arity.push_back(sample.tree.arity[v]);
            types.push_back(sample.tree.types[v] + 1);
        }
        doc["arities"] = std::move(arity);
        doc["types"] = std::move(types);
        doc["leaftype"] = multi_index_json(sample.tree.leaftype(offspring.n));
    }
}

void doc_gw_leaflaw(const RunConfig& config, Json& doc) {
    OffspringDistribution offspring = load_offspring(config);
    int root = index_0based(config.root_type, offspring.n, "--root-type");
    MultiIndex alpha = alpha_of(config);
    GwLeafLawReport report = verify_gw_leaf_law(offspring, root, alpha, config.trials, config.seed,
                                                config.vertex_cap, config.workers);
    doc["root_type"] = config.root_type;
    doc["alpha"] = multi_index_json(alpha);
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["hits"] = report.hits;
    doc["cap_exceeded_samples"] = report.cap_exceeded;
    doc["exact"] = rat_json(report.exact);
    doc["exact_approx"] = report.exact.get_d();
    doc["empirical"] = rat_json(report.empirical);
    doc["z_approx"] = report.z_score;
}

void doc_stirling(const RunConfig& config, Json& doc) {
    StirlingConstants sc = stirling_constants(config.d, config.digits);
    doc["d"] = config.d;
    doc["digits"] = sc.digits;
    doc["A_d_approx"] = sc.a_d;
    doc["C_d_approx"] = sc.c_d;
}

} // namespace

DispatchResult dispatch(const RunConfig& config) {
    DispatchResult result;
    try {
        if (!config.cache_dir.empty()) load_catalan_cache(config.cache_dir);

        Json doc = base_doc(config);
        std::string raw;
        const std::string& sub = config.subcommand;
        if (config.format != "json" && config.format != "csv")
            throw InvalidParameterError("--format must be json or csv");
        if (config.format == "csv" && sub != "count" && sub != "enumerate")
            throw InvalidParameterError("csv output is only available for count and enumerate");

        if (sub == "count")
            raw = doc_count(config, doc);
        else if (sub == "enumerate")
            raw = doc_enumerate(config, doc);
        else if (sub == "sample")
            doc_sample(config, doc);
        else if (sub == "perfect-stats")
            doc_perfect_stats(config, doc);
        else if (sub == "rootchildren")
            doc_rootchildren(config, doc);
        else if (sub == "shuffle-classes")
            doc_shuffle_classes(config, doc);
        else if (sub == "span-check")
            doc_span_check(config, doc);
        else if (sub == "span-dim")
            doc_span_dim(config, doc);
        else if (sub == "span-decompose")
            doc_span_decompose(config, doc);
        else if (sub == "width-fn")
            doc_width_fn(config, doc);
        else if (sub == "norms")
            doc_norms(config, doc);
        else if (sub == "invert")
            doc_invert(config, doc);
        else if (sub == "invert-oracle")
            doc_invert_oracle(config, doc);
        else if (sub == "nilpotent-check")
            doc_nilpotent_check(config, doc);
        else if (sub == "fern-sum")
            doc_fern_sum(config, doc);
        else if (sub == "shuffle-lemma")
            doc_shuffle_lemma(config, doc);
        else if (sub == "bounds")
            doc_bounds(config, doc);
        else if (sub == "chain-kernel")
            doc_chain_kernel(config, doc);
        else if (sub == "chain-stationary")
            doc_chain_stationary(config, doc);
        else if (sub == "chain-feasible")
            doc_chain_feasible(config, doc);
        else if (sub == "gw-sample")
            doc_gw_sample(config, doc);
        else if (sub == "gw-leaflaw")
            doc_gw_leaflaw(config, doc);
        else if (sub == "stirling")
            doc_stirling(config, doc);
        else if (sub == "verify-all") {
            std::ostringstream report;
            bool ok = run_acceptance(report);
            result.output = report.str();
            result.exit_code = ok ? 0 : 1;
            if (!config.cache_dir.empty()) save_catalan_cache(config.cache_dir);
            return result;
        } else {
            throw InvalidParameterError("unknown subcommand: " + sub);
        }

        result.output = raw.empty() ? doc.dump(2) + "\n" : raw;
        if (!config.cache_dir.empty()) save_catalan_cache(config.cache_dir);
    } catch (const CapExceededError& e) {
        Json err;
        err["schema"] = "catlab/error/1";
        err["error"] = e.code();
        err["message"] = e.what();
        result.output = err.dump(2) + "\n";
        result.exit_code = 2;
    } catch (const CatlabError& e) {
        Json err;
        err["schema"] = "catlab/error/1";
        err["error"] = e.code();
        err["message"] = e.what();
        result.output = err.dump(2) + "\n";
        result.exit_code = 1;
    } catch (const std::exception& e) {
        Json err;
        err["schema"] = "catlab/error/1";
        err["error"] = "internal";
        err["message"] = e.what();
        result.output = err.dump(2) + "\n";
        result.exit_code = 1;
    }
    return result;
}

int dispatch_and_emit(const RunConfig& config) {
    DispatchResult result = dispatch(config);
    if (config.out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(config.out_path);
        if (!out) {
            std::cerr << "cannot open output path " << config.out_path << "\n";
            return 1;
        }
        out << result.output;
    }
    return result.exit_code;
}

} // namespace catlab
