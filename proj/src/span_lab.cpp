#include "catlab/span_lab.hpp"

#include "catlab/rng.hpp"
#include "catlab/sampler.hpp"
#include "catlab/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace catlab {

IndicatorMatrix build_indicator_matrix(int degree, long k, int p, long cap) {
    IndicatorMatrix out;
    out.d = degree;
    out.k = k;
    out.p = p;

    std::map<std::string, int> row_of;
    for (const CatalanTree& tree : enumerate_trees(degree, k, cap)) {
        std::string enc = tree.encoding();
        row_of.emplace(enc, 0);
        out.tree_encodings.push_back(std::move(enc));
    }
    for (std::size_t r = 0; r < out.tree_encodings.size(); ++r)
        row_of[out.tree_encodings[r]] = static_cast<int>(r);

    ShuffleClassSet classes = enumerate_shuffle_classes(degree, k, p, cap);
    out.class_keys.reserve(classes.classes.size());
    out.class_members.reserve(classes.classes.size());
    for (const auto& [key, cls] : classes.classes) {
        std::vector<int> rows;
        rows.reserve(cls.members.size());
        for (const std::string& enc : cls.members) rows.push_back(row_of.at(enc));
        std::sort(rows.begin(), rows.end());
        out.class_keys.push_back(key);
        out.class_members.push_back(std::move(rows));
    }
    return out;
}

namespace {

/// Assembles [A | 1 | I] rows for the membership solve; the identity block
/// tracks row operations so a non-member yields an explicit witness
/// functional over the original rows.
IntMatrix assemble_augmented(const IndicatorMatrix& m) {
    const long rows = static_cast<long>(m.tree_encodings.size());
    const long cols = static_cast<long>(m.class_keys.size());
    IntMatrix a(rows, std::vector<Int>(cols + 1 + rows, Int(0)));
    for (long c = 0; c < cols; ++c)
        for (int r : m.class_members[c]) a[r][c] = 1;
    for (long r = 0; r < rows; ++r) {
        a[r][cols] = 1;          // the constant function
        a[r][cols + 1 + r] = 1;  // row-op tracking
    }
    return a;
}

} // namespace

SpanCertificate span_membership(int degree, long k, int p, long cap) {
    IndicatorMatrix m = build_indicator_matrix(degree, k, p, cap);
    SpanCertificate out;
    out.tree_encodings = m.tree_encodings;
    out.columns = static_cast<long>(m.class_keys.size());

    const long rows = static_cast<long>(m.tree_encodings.size());
    const long cols = static_cast<long>(m.class_keys.size());

    if (cols == 0) {
        // No eligible vertices anywhere: 1 is not a combination of nothing.
        out.member = false;
        out.witness.assign(rows, Rat(1));
        return out;
    }

    IntMatrix a = assemble_augmented(m);
    EchelonResult ech = bareiss_echelon(a, cols);
    out.rank = ech.rank;

    for (long r = ech.rank; r < rows; ++r) {
        if (a[r][cols] != 0) {
            out.member = false;
            out.witness.reserve(rows);
            for (long t = 0; t < rows; ++t) out.witness.emplace_back(a[r][cols + 1 + t]);
            return out;
        }
    }

    out.member = true;
    std::vector<Rat> lambda = echelon_backsolve(a, ech, cols, cols);
    for (long c = 0; c < cols; ++c)
        if (lambda[c] != 0) out.lambda.emplace_back(m.class_keys[c], lambda[c]);
    return out;
}

SpanDimension span_dimension(int degree, long k, int p, long cap) {
    IndicatorMatrix m = build_indicator_matrix(degree, k, p, cap);
    SpanDimension out;
    out.ambient = catalan_number(degree, k);
    out.columns = static_cast<long>(m.class_keys.size());
    if (out.columns == 0) return out;

    const long rows = static_cast<long>(m.tree_encodings.size());

    // Rank only: process sparse columns first (singleton classes pivot with
    // no fill at all) and stop once the rank is saturated.
    std::vector<std::size_t> order(m.class_keys.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return m.class_members[x].size() < m.class_members[y].size();
    });

    IntMatrix a(rows, std::vector<Int>(m.class_keys.size(), Int(0)));
    for (std::size_t c = 0; c < order.size(); ++c)
        for (int r : m.class_members[order[c]]) a[r][c] = 1;

    EchelonResult ech = bareiss_echelon(a, static_cast<long>(m.class_keys.size()), true);
    out.rank = ech.rank;
    return out;
}

WidthRecord width_functions(const CatalanTree& tree, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    WidthRecord out;
    out.p = p;
    const GenerationProfile prof = generation_profile(tree);
    const long vertices = prof.total;

    out.psi = Rat(prof.n_geq(p), vertices);
    out.psi.canonicalize();

    if (p == 1) {
        // N_{<=0} = 1 in every factor: the product is (dk+1)^{-m} -> 0 for
        // k >= 1, so phi == 1; for the single leaf the first factor is
        // already 1 and phi == 0.
        if (tree.height() >= 1) {
            out.j_values.emplace_back(prof.n_geq(1));
            out.j_constant_tail = true;
            out.phi = 1;
        } else {
            out.phi = 0;
        }
    } else {
        // J_m vanishes once m(p-1) >= height, and from there on every product
        // factor is exactly 1, so both series terminate together.
        Rat product = 1;
        for (long m = 1;; ++m) {
            long q = m * (p - 1);
            Rat j_m(prof.n_geq(q + 1));
            if (j_m == 0) break;
            for (long i = 1; i < m; ++i) j_m *= Rat(prof.n_leq(i * (p - 1)));
            out.j_values.push_back(j_m);
            Rat factor(prof.n_leq(q), vertices);
            factor.canonicalize();
            product *= factor;
        }
        out.phi = Rat(1) - product;
    }

    out.perfect = is_p_perfect(tree, p);
    out.phi_star = out.perfect ? Rat(1) : out.phi;
    return out;
}

namespace {

Rat width_value(const CatalanTree& tree, int p, WidthWhich which) {
    WidthRecord rec = width_functions(tree, p);
    switch (which) {
        case WidthWhich::Psi: return rec.psi;
        case WidthWhich::Phi: return rec.phi;
        default: return rec.phi_star;
    }
}

} // namespace

NormsRecord approximation_norms(int degree, long k, int p, WidthWhich which, long cap) {
    Int count = require_within_cap(degree, k, cap);
    NormsRecord out;
    Rat sum = 0;
    Rat maxdev = 0;
    for_each_tree_encoding(degree, k, [&](const std::string& enc) {
        CatalanTree tree = CatalanTree::parse(degree, enc);
        Rat dev = rat_abs(width_value(tree, p, which) - 1);
        sum += dev;
        if (dev > maxdev) maxdev = dev;
    });
    out.l1 = sum / Rat(count);
    out.linf = maxdev;
    return out;
}

SampledNorms approximation_norms_sampled(int degree, long k, int p, WidthWhich which,
                                         std::uint64_t trials, std::uint64_t seed, int workers) {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    catalan_table(degree).ensure_split(k);
    SampledNorms out;
    out.trials = trials;
    out.seed = seed;

    Rat sum = 0;
    Rat maxdev = 0;
    std::mutex mu;
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        Rat local_sum = 0;
        Rat local_max = 0;
        for (std::uint64_t t = lo; t < hi; ++t) {
            Rng rng = Rng::stream(seed, t);
            CatalanTree tree = sample_uniform(degree, k, rng);
            Rat dev = rat_abs(width_value(tree, p, which) - 1);
            local_sum += dev;
            if (dev > local_max) local_max = dev;
        }
        std::lock_guard<std::mutex> lock(mu);
        sum += local_sum;
        if (local_max > maxdev) maxdev = local_max;
    };
    if (workers <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = per * w;
            std::uint64_t hi = std::min(trials, lo + per);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    out.l1_estimate = sum / Rat(Int(trials));
    // Hoeffding 99% half-width for a mean of [0,1]-valued draws.
    out.radius99 = std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(trials)));
    out.linf_seen = maxdev;
    return out;
}

PhiStarDecomposition span_decomposition_of_phi_star(int degree, long k, int p, long cap) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    PhiStarDecomposition out;

    std::vector<CatalanTree> trees = enumerate_trees(degree, k, cap);
    std::map<std::string, int> row_of;
    for (std::size_t r = 0; r < trees.size(); ++r) {
        out.tree_encodings.push_back(trees[r].encoding());
        row_of[out.tree_encodings.back()] = static_cast<int>(r);
    }

    ShuffleClassSet classes = enumerate_shuffle_classes(degree, k, p, cap);
    const long vertices = degree * k + 1;
    std::map<std::string, Rat> lambda;

    // J_m layers: a class indexed by code u contributes to every m with
    // m(p-1)+1 <= |u|, weighted by the generation product evaluated on any
    // member (constant across the class) over (dk+1)^m.
    for (const auto& [key, cls] : classes.classes) {
        const long q = static_cast<long>(cls.vp_code.size());
        Rat contribution = 0;
        if (p == 1) {
            // All m >= 1 apply with factor 1; geometric sum of (dk+1)^{-m}.
            contribution = Rat(1, vertices - 1);
            contribution.canonicalize();
        } else {
            GenerationProfile prof =
                generation_profile(CatalanTree::parse(degree, cls.members.front()));
            Rat power = 1;
            for (long m = 1; m * (p - 1) + 1 <= q; ++m) {
                power /= vertices;
                Rat chi = 1;
                for (long i = 1; i < m; ++i) chi *= Rat(prof.n_leq(i * (p - 1)));
                contribution += chi * power;
            }
        }
        if (contribution != 0) lambda[key] += contribution;
    }

    // Perfect part: phi* - phi = (1 - phi) on p-perfect trees, carried by
    // their singleton witness classes. For p == 1, phi is already 1 on every
    // tree that has any class, so there is nothing to add.
    if (p >= 2) {
        for (const CatalanTree& tree : trees) {
            PerfectWitness witness = p_perfect_witness(tree, p);
            if (!witness.perfect) continue;
            WidthRecord rec = width_functions(tree, p);
            Rat weight = Rat(1) - rec.phi;
            if (weight == 0) continue;
            ShuffleClass cls = shuffle_class(tree, witness.witness_code, p);
            if (!cls.is_singleton())
                throw std::logic_error("perfect witness class is not a singleton");
            lambda[cls.key] += weight;
        }
    }

    // Residual check: re-evaluate the combination pointwise.
    std::vector<Rat> value(trees.size(), Rat(0));
    for (const auto& [key, coeff] : lambda) {
        const ShuffleClass& cls = classes.classes.at(key);
        for (const std::string& enc : cls.members) value[row_of.at(enc)] += coeff;
    }
    out.residual.resize(trees.size());
    for (std::size_t r = 0; r < trees.size(); ++r) {
        WidthRecord rec = width_functions(trees[r], p);
        out.residual[r] = value[r] - rec.phi_star;
        if (out.residual[r] != 0) out.residual_zero = false;
    }
    for (auto& [key, coeff] : lambda)
        if (coeff != 0) out.lambda.emplace_back(key, coeff);
    return out;
}

} // namespace catlab
