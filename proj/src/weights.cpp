#include "catlab/weights.hpp"

#include "catlab/shuffle.hpp"

#include <algorithm>
#include <map>

namespace catlab {

Rat h_weight(const LabelledTree& lt, const CoefficientTable& H) {
    if (lt.n != H.n) throw InvalidParameterError("type count mismatch between tree and table");
    Rat w = 1;
    for (int v = 0; v < lt.tree.size(); ++v) {
        if (!lt.tree.is_internal(v)) continue;
        Rat c = H.get(lt.types[v], lt.mu(v));
        if (c == 0) return Rat(0);
        w *= c;
    }
    return w;
}

namespace {

struct InternalVertex {
    int pos = 0;
    std::vector<int> internal_children; // positions
    int free_leaves = 0;                // leaf children, pinned one excluded
    bool has_pinned_child = false;
};

} // namespace

Rat labelling_sum(const CatalanTree& tree, int root_type,
                  std::optional<std::pair<int, int>> pinned_leaf, const MultiIndex& alpha,
                  const CoefficientTable& H) {
    const int n = H.n;
    if (static_cast<int>(alpha.size()) != n)
        throw InvalidParameterError("multi-index length must equal n");
    if (root_type < 0 || root_type >= n) throw InvalidParameterError("root type out of range");
    if (pinned_leaf) {
        if (!tree.is_leaf(pinned_leaf->first))
            throw InvalidParameterError("pinned vertex must be a leaf");
        if (pinned_leaf->second < 0 || pinned_leaf->second >= n)
            throw InvalidParameterError("pinned type out of range");
    }

    if (tree.size() == 1) {
        if (pinned_leaf)
            return (pinned_leaf->second == root_type && alpha.weight() == 0) ? Rat(1) : Rat(0);
        return alpha == MultiIndex::unit(n, root_type) ? Rat(1) : Rat(0);
    }

    std::vector<InternalVertex> internals;
    std::vector<int> internal_slot(tree.size(), -1);
    for (int v = 0; v < tree.size(); ++v) {
        if (!tree.is_internal(v)) continue;
        internal_slot[v] = static_cast<int>(internals.size());
        InternalVertex iv;
        iv.pos = v;
        for (int c : tree.children(v)) {
            if (tree.is_internal(c))
                iv.internal_children.push_back(c);
            else if (pinned_leaf && c == pinned_leaf->first)
                iv.has_pinned_child = true;
            else
                ++iv.free_leaves;
        }
        internals.push_back(std::move(iv));
    }

    long free_leaf_total = 0;
    for (const auto& iv : internals) free_leaf_total += iv.free_leaves;
    if (static_cast<unsigned long>(free_leaf_total) != alpha.weight()) return Rat(0);

    // Leaf placement recursion runs cheapest when zero-coefficient vertices
    // are discovered early, so visit leaf-poor vertices first.
    std::vector<int> order(internals.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return internals[a].free_leaves < internals[b].free_leaves;
    });

    std::vector<int> type_of(tree.size(), 0);
    Rat total = 0;
    MultiIndex remaining = alpha;

    // Phase 2: distribute the leaf-type budget as per-vertex multisets.
    auto place_leaves = [&](auto&& self, std::size_t t, Rat acc) -> void {
        if (t == order.size()) {
            total += acc;
            return;
        }
        const InternalVertex& iv = internals[order[t]];
        MultiIndex mu_base(static_cast<std::size_t>(n));
        for (int c : iv.internal_children) ++mu_base[type_of[c]];
        if (iv.has_pinned_child) ++mu_base[pinned_leaf->second];
        for_each_multi_index_leq(
            static_cast<std::size_t>(n), static_cast<unsigned>(iv.free_leaves), remaining,
            [&](const MultiIndex& gamma) {
                Rat coef = H.get(type_of[iv.pos], mu_base + gamma);
                if (coef == 0) return;
                Rat factor = acc * coef;
                if (iv.free_leaves > 1) factor *= Rat(multinomial(iv.free_leaves, gamma.a));
                remaining = remaining - gamma;
                self(self, t + 1, factor);
                remaining = remaining + gamma;
            });
    };

    // Phase 1: internal types; the root is fixed, the other k-1 run over [n].
    auto assign_types = [&](auto&& self, std::size_t t) -> void {
        if (t == internals.size()) {
            place_leaves(place_leaves, 0, Rat(1));
            return;
        }
        if (internals[t].pos == 0) {
            type_of[0] = root_type;
            self(self, t + 1);
            return;
        }
        for (int ty = 0; ty < n; ++ty) {
            type_of[internals[t].pos] = ty;
            self(self, t + 1);
        }
    };
    assign_types(assign_types, 0);
    return total;
}

Rat average_h_weight(const CatalanTree& tree, int i, const MultiIndex& alpha,
                     const CoefficientTable& H) {
    if (tree.degree() != H.d)
        throw DegreeMismatchError("tree degree and coefficient degree differ");
    const long k = tree.internal_count();
    if (alpha.weight() != static_cast<unsigned long>((H.d - 1) * k + 1))
        throw DegreeMismatchError("|alpha| must equal (d-1)k+1 = leaf count");
    return labelling_sum(tree, i, std::nullopt, alpha, H);
}

Int labelling_count(long k, int n, const MultiIndex& alpha) {
    Int count = int_pow(Int(n), static_cast<unsigned long>(k >= 1 ? k - 1 : 0));
    count *= factorial(alpha.weight());
    for (unsigned e : alpha.a) count /= factorial(e);
    return count;
}

CatalanTree fern_with_spine(int degree, const std::vector<int>& spine_children) {
    for (int c : spine_children)
        if (c < 1 || c > degree) throw InvalidParameterError("spine child index out of range");
    std::vector<std::uint8_t> kinds;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == spine_children.size()) {
            kinds.push_back(0);
            return;
        }
        kinds.push_back(1);
        for (int j = 1; j <= degree; ++j) {
            if (j == spine_children[level])
                self(self, level + 1);
            else
                kinds.push_back(0);
        }
    };
    rec(rec, 0);
    return CatalanTree::from_kinds(degree, std::move(kinds));
}

std::vector<int> fern_sink(const std::vector<int>& spine_children) { return spine_children; }

CatalanTree canonical_fern(int degree, int p) {
    return fern_with_spine(degree, std::vector<int>(p, degree));
}

std::vector<int> canonical_fern_sink(int degree, int p) {
    return std::vector<int>(static_cast<std::size_t>(p), degree);
}

Rat fern_sum_on(const CatalanTree& fern, const std::vector<int>& sink_code, int i, int j,
                const MultiIndex& alpha, const CoefficientTable& H) {
    int sink = fern.vertex_at(sink_code);
    if (sink < 0 || !fern.is_leaf(sink))
        throw InvalidParameterError("sink code must address a leaf of the fern");
    return labelling_sum(fern, i, std::make_pair(sink, j), alpha, H);
}

Rat fern_sum(int i, int j, const MultiIndex& alpha, const CoefficientTable& H, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    if (static_cast<int>(alpha.size()) != H.n)
        throw DegreeMismatchError("multi-index length must equal n");
    if (alpha.weight() != static_cast<unsigned long>((H.d - 1) * p))
        throw DegreeMismatchError("|alpha| must equal (d-1)p for a height-p fern");
    CatalanTree fern = canonical_fern(H.d, p);
    return fern_sum_on(fern, canonical_fern_sink(H.d, p), i, j, alpha, H);
}

Rat nilpotency_identity_sum(const CoefficientTable& H, int p, int i, int j,
                            const MultiIndex& beta) {
    const int n = H.n;
    const unsigned part_weight = static_cast<unsigned>(H.d - 1);
    if (beta.weight() != static_cast<unsigned long>(part_weight) * p)
        throw DegreeMismatchError("|beta| must equal (d-1)p");

    Rat total = 0;
    MultiIndex remaining = beta;
    // The interior type sum is a chain of matrix-vector products with
    // M^l[a][b] = H(a, beta^l + e_b), seeded at e_i and read off at j.
    Int arity_base = factorial(part_weight);

    auto rec = [&](auto&& self, int level, const std::vector<Rat>& vec, const Rat& arities) -> void {
        bool all_zero = true;
        for (const auto& q : vec)
            if (q != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return;
        if (level == p) {
            if (remaining.weight() != 0) return;
            total += vec[j] * arities;
            return;
        }
        unsigned budget =
            level + 1 == p ? static_cast<unsigned>(remaining.weight()) : part_weight;
        if (budget != part_weight) return;
        for_each_multi_index_leq(
            static_cast<std::size_t>(n), part_weight, remaining, [&](const MultiIndex& part) {
                remaining = remaining - part;
                std::vector<Rat> next(n, Rat(0));
                for (int b = 0; b < n; ++b) {
                    MultiIndex idx = part;
                    ++idx[b];
                    for (int a = 0; a < n; ++a) {
                        if (vec[a] == 0) continue;
                        Rat coef = H.get(a, idx);
                        if (coef != 0) next[b] += vec[a] * coef;
                    }
                }
                Rat arity = arities * Rat(arity_base) / Rat(part.fact());
                self(self, level + 1, next, arity);
                remaining = remaining + part;
            });
    };

    std::vector<Rat> start(n, Rat(0));
    start[i] = 1;
    rec(rec, 0, start, Rat(1));
    return total;
}

bool nilpotency_identity_holds(const CoefficientTable& H, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    bool ok = true;
    for_each_multi_index(static_cast<std::size_t>(H.n),
                         static_cast<unsigned>((H.d - 1) * p), [&](const MultiIndex& beta) {
                             if (!ok) return;
                             for (int i = 0; i < H.n && ok; ++i)
                                 for (int j = 0; j < H.n && ok; ++j)
                                     if (nilpotency_identity_sum(H, p, i, j, beta) != 0) ok = false;
                         });
    return ok;
}

std::vector<std::vector<Polynomial>> jacobian_matrix(const CoefficientTable& H) {
    std::vector<std::vector<Polynomial>> jh(H.n, std::vector<Polynomial>(H.n, Polynomial(H.n)));
    for (const auto& [key, value] : H.entries) {
        const auto& [i, alpha] = key;
        Rat divided = value / Rat(alpha.fact());
        divided.canonicalize();
        Polynomial h_i = Polynomial::monomial(H.n, alpha, divided);
        for (int j = 0; j < H.n; ++j) jh[i][j] += h_i.derivative(j);
    }
    return jh;
}

bool jacobian_power_is_zero(const CoefficientTable& H, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    auto jh = jacobian_matrix(H);
    auto power = jh;
    for (int e = 1; e < p; ++e) {
        std::vector<std::vector<Polynomial>> next(H.n, std::vector<Polynomial>(H.n, Polynomial(H.n)));
        for (int i = 0; i < H.n; ++i)
            for (int j = 0; j < H.n; ++j)
                for (int l = 0; l < H.n; ++l) next[i][j] += power[i][l] * jh[l][j];
        power = std::move(next);
    }
    for (int i = 0; i < H.n; ++i)
        for (int j = 0; j < H.n; ++j)
            if (!power[i][j].is_zero()) return false;
    return true;
}

bool is_jacobian_nilpotent(const CoefficientTable& H, int p) {
    bool by_identity = nilpotency_identity_holds(H, p);
    bool by_symbolic = jacobian_power_is_zero(H, p);
    if (by_identity != by_symbolic)
        throw std::logic_error("nilpotency routes disagree; arithmetic fault");
    return by_identity;
}

ClassSumReport shuffle_lemma_check(const CoefficientTable& H, int p, long k, int i,
                                   const MultiIndex& alpha, long cap) {
    ClassSumReport report;
    report.d = H.d;
    report.k = k;
    report.p = p;
    report.i = i;
    report.alpha = alpha;
    if (alpha.weight() != static_cast<unsigned long>((H.d - 1) * k + 1))
        throw DegreeMismatchError("|alpha| must equal (d-1)k+1");

    ShuffleClassSet classes = enumerate_shuffle_classes(H.d, k, p, cap);
    std::map<std::string, Rat> weight_of; // per distinct member tree
    for (const auto& [key, cls] : classes.classes) {
        Rat sum = 0;
        for (const std::string& enc : cls.members) {
            auto it = weight_of.find(enc);
            if (it == weight_of.end()) {
                CatalanTree tree = CatalanTree::parse(H.d, enc);
                it = weight_of.emplace(enc, average_h_weight(tree, i, alpha, H)).first;
            }
            sum += it->second;
        }
        if (sum != 0) report.all_zero = false;
        report.sums.emplace_back(key, sum);
    }
    return report;
}

} // namespace catlab
