#include "catlab/sampler.hpp"

#include "catlab/parallel.hpp"

#include <cmath>

namespace catlab {

Rat SplitDistribution::mass(const std::vector<long>& parts) const {
    if (static_cast<int>(parts.size()) != d)
        throw InvalidParameterError("composition must have d parts");
    long sum = 0;
    auto& table = catalan_table(d);
    table.ensure(k);
    Int num = 1;
    for (long part : parts) {
        if (part < 0) throw InvalidParameterError("composition parts must be >= 0");
        sum += part;
        num *= table.c(part);
    }
    if (sum != k - 1) throw InvalidParameterError("composition must sum to k-1");
    Rat q(num, table.c(k));
    q.canonicalize();
    return q;
}

std::vector<std::pair<std::vector<long>, Rat>> SplitDistribution::masses() const {
    std::vector<std::pair<std::vector<long>, Rat>> out;
    if (k < 1) return out;
    std::vector<long> parts(d, 0);
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos + 1 == d) {
            parts[pos] = rem;
            out.emplace_back(parts, mass(parts));
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            parts[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, k - 1);
    return out;
}

Rat SplitDistribution::total_mass() const {
    Rat total = 0;
    for (const auto& [parts, m] : masses()) total += m;
    return total;
}

namespace {

/// First coordinate of a uniform-weight composition of s into `parts` parts:
/// P(a) = C_a W(parts-1, s-a) / W(parts, s). The scan alternates between the
/// two ends of [0, s], where the split law concentrates its mass, so the
/// expected number of visited terms is O(1).
long sample_first_coordinate(const CatalanTable& table, int parts, long s, Rng& rng) {
    if (parts == 1 || s == 0) return s;
    const Int& total = table.w(parts, s);
    Int u = rng.below(total);
    long lo = 0, hi = s;
    bool from_lo = true;
    Int acc = 0;
    while (lo <= hi) {
        long a = from_lo ? lo : hi;
        acc += table.c(a) * table.w(parts - 1, s - a);
        if (u < acc) return a;
        if (from_lo)
            ++lo;
        else
            --hi;
        if (lo <= hi) from_lo = !from_lo;
    }
    throw std::logic_error("split CDF inversion fell off the end");
}

} // namespace

CatalanTree sample_uniform(int degree, long k, Rng& rng) {
    if (degree < 2) throw InvalidParameterError("degree d must be >= 2");
    if (k < 0) throw InvalidParameterError("k must be >= 0");
    auto& table = catalan_table(degree);
    table.ensure_split(k);

    std::vector<std::uint8_t> kinds;
    kinds.reserve(degree * k + 1);
    auto build = [&](auto&& self, long m) -> void {
        if (m == 0) {
            kinds.push_back(0);
            return;
        }
        kinds.push_back(1);
        long rem = m - 1;
        for (int parts = degree; parts >= 2; --parts) {
            long a = sample_first_coordinate(table, parts, rem, rng);
            self(self, a);
            rem -= a;
        }
        self(self, rem);
    };
    build(build, k);
    return CatalanTree::from_kinds(degree, std::move(kinds));
}

CatalanTree sample_uniform(int degree, long k, std::uint64_t seed) {
    Rng rng(seed);
    return sample_uniform(degree, k, rng);
}

PerfectWitness p_perfect_witness(const CatalanTree& tree, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    PerfectWitness out;
    const int n = tree.size();
    // run[v] = length of the longest suffix (..., v) of v's ancestor path in
    // which every off-path sibling is a leaf.
    std::vector<int> run(n, 0);
    std::vector<int> internal_children(n, 0);
    for (int v = 1; v < n; ++v)
        if (tree.is_internal(v)) ++internal_children[tree.parent(v)];
    for (int v = 1; v < n; ++v) {
        int par = tree.parent(v);
        bool siblings_leaves = internal_children[par] - (tree.is_internal(v) ? 1 : 0) == 0;
        run[v] = siblings_leaves ? run[par] + 1 : 0;
        if (run[v] >= p) {
            out.perfect = true;
            out.witness_code = tree.code(v);
            return out;
        }
    }
    return out;
}

bool is_p_perfect(const CatalanTree& tree, int p) { return p_perfect_witness(tree, p).perfect; }

double kappa_pd(int p, int d) {
    return 1.0 / (2.0 * p * std::pow(static_cast<double>(d), p) * std::exp(static_cast<double>(p)));
}

double perfect_bound(int p, int d, long k) {
    double gap = static_cast<double>(k - p);
    if (gap < 0) gap = 0;
    return std::exp(-kappa_pd(p, d) * gap);
}

PerfectStats estimate_Q(int degree, int p, long k, std::uint64_t trials, std::uint64_t seed,
                        int workers) {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    catalan_table(degree).ensure_split(k);
    std::uint64_t hits = count_trials(trials, workers, [&](std::uint64_t t) {
        Rng rng = Rng::stream(seed, t);
        CatalanTree tree = sample_uniform(degree, k, rng);
        return !is_p_perfect(tree, p);
    });
    PerfectStats stats;
    stats.d = degree;
    stats.p = p;
    stats.k = k;
    stats.trials = trials;
    stats.seed = seed;
    stats.hits = hits;
    stats.rate = Rat(Int(hits), Int(trials));
    stats.rate.canonicalize();
    stats.bound_approx = perfect_bound(p, degree, k);
    stats.kappa_approx = kappa_pd(p, degree);
    return stats;
}

Rat exact_Q(int degree, int p, long k, long cap) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    Int count = require_within_cap(degree, k, cap);
    Int bad = 0;
    for_each_tree_encoding(degree, k, [&](const std::string& enc) {
        std::vector<std::uint8_t> kinds(enc.size());
        for (std::size_t i = 0; i < enc.size(); ++i) kinds[i] = enc[i] == '1';
        CatalanTree tree = CatalanTree::from_kinds(degree, std::move(kinds));
        if (!is_p_perfect(tree, p)) ++bad;
    });
    Rat q(bad, count);
    q.canonicalize();
    return q;
}

RootChildrenRate rootchildren_leaf_rate(int degree, long k, std::uint64_t trials,
                                        std::uint64_t seed, int workers) {
    if (k < 1) throw InvalidParameterError("k must be >= 1");
    auto& table = catalan_table(degree);
    table.ensure(k); // sampling, when requested, prewarms its own split tables

    RootChildrenRate out;
    out.d = degree;
    out.k = k;
    if (k == 1) {
        // All root children are leaves with certainty; the d-fold counting
        // of the split (0,..,0,k-1) only applies once k-1 >= 1.
        out.exact = 1;
    } else {
        out.exact = Rat(degree * table.c(k - 1), table.c(k));
        out.exact.canonicalize();
    }
    out.limit = rat_pow(Rat(degree - 1, degree), degree - 1);
    out.trials = trials;
    out.seed = seed;
    if (trials > 0) {
        out.hits = count_trials(trials, workers, [&](std::uint64_t t) {
            Rng rng = Rng::stream(seed, t);
            CatalanTree tree = sample_uniform(degree, k, rng);
            int internal_children = 0;
            for (int c : tree.children(0)) internal_children += tree.is_internal(c);
            return internal_children <= 1;
        });
        out.empirical = Rat(Int(out.hits), Int(trials));
        out.empirical.canonicalize();
    }
    return out;
}

bool generations_sparse(const CatalanTree& tree, int p) {
    std::vector<int> internal_at(tree.height() + 1, 0);
    for (int v = 0; v < tree.size(); ++v)
        if (tree.is_internal(v)) ++internal_at[tree.depth(v)];
    for (int j = 1; j <= p && j <= tree.height(); ++j)
        if (internal_at[j] > 1) return false;
    return true;
}

} // namespace catlab
