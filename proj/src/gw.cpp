#include "catlab/gw.hpp"

#include "catlab/errors.hpp"

#include <deque>

namespace catlab {

OffspringDistribution OffspringDistribution::make(int n,
                                                  std::vector<std::map<MultiIndex, Rat>> rows) {
    if (n < 1) throw InvalidParameterError("offspring distribution needs n >= 1 types");
    if (static_cast<int>(rows.size()) != n)
        throw InvalidParameterError("offspring distribution needs one row per type");
    OffspringDistribution out;
    out.n = n;
    out.rows = std::move(rows);
    MultiIndex zero(n);
    for (int i = 0; i < n; ++i) {
        auto& row = out.rows[i];
        Rat nonleaf = 0;
        for (const auto& [alpha, mass] : row) {
            if (static_cast<int>(alpha.size()) != n)
                throw InvalidParameterError("offspring multi-index has wrong length");
            if (mass < 0 || mass > 1)
                throw InvalidParameterError("offspring masses must lie in [0,1]");
            if (!alpha.is_zero()) nonleaf += mass;
        }
        if (nonleaf > 1)
            throw InvalidParameterError("offspring row for type " + std::to_string(i + 1) +
                                        " sums past 1");
        auto it = row.find(zero);
        if (it == row.end()) {
            row[zero] = Rat(1) - nonleaf;
        } else if (it->second + nonleaf != 1) {
            throw InvalidParameterError("offspring row for type " + std::to_string(i + 1) +
                                        " does not sum to exactly 1");
        }
    }
    return out;
}

Rat OffspringDistribution::leaf_mass(int type) const {
    return rows[type].at(MultiIndex(static_cast<std::size_t>(n)));
}

Rat OffspringDistribution::leaf_mass_power(const MultiIndex& alpha) const {
    Rat r = 1;
    for (int i = 0; i < n; ++i)
        if (alpha[i] > 0) r *= rat_pow(leaf_mass(i), alpha[i]);
    return r;
}

bool OffspringDistribution::strictly_substochastic() const {
    for (int i = 0; i < n; ++i)
        if (leaf_mass(i) <= 0) return false;
    return true;
}

MultiIndex OrderedTypedTree::leaftype(int n) const {
    MultiIndex alpha(static_cast<std::size_t>(n));
    for (int v = 0; v < size(); ++v)
        if (arity[v] == 0) ++alpha[types[v]];
    return alpha;
}

GwSample sample_gw_multitype(const OffspringDistribution& offspring, int root_type, Rng& rng,
                             long vertex_cap) {
    if (root_type < 0 || root_type >= offspring.n)
        throw InvalidParameterError("root type out of range");
    if (vertex_cap < 1) throw InvalidParameterError("vertex cap must be >= 1");

    // Per-type cumulative numerators over a common denominator, support in
    // lexicographic order, for exact inverse-CDF draws.
    struct RowSampler {
        Int denom = 1;
        std::vector<std::pair<MultiIndex, Int>> cumulative;
    };
    std::vector<RowSampler> samplers(offspring.n);
    for (int i = 0; i < offspring.n; ++i) {
        auto& rs = samplers[i];
        for (const auto& [alpha, mass] : offspring.rows[i])
            rs.denom = rs.denom / gcd(rs.denom, Int(mass.get_den())) * mass.get_den();
        Int acc = 0;
        for (const auto& [alpha, mass] : offspring.rows[i]) {
            acc += Int(mass.get_num()) * (rs.denom / mass.get_den());
            rs.cumulative.emplace_back(alpha, acc);
        }
    }

    struct Node {
        int type;
        std::vector<int> child_ids;
    };
    std::vector<Node> nodes;
    nodes.push_back({root_type, {}});
    std::deque<int> frontier{0};
    GwSample out;

    // Generation-by-generation growth; children ordered by ascending type.
    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        const auto& rs = samplers[nodes[id].type];
        Int u = rng.below(rs.denom);
        const MultiIndex* alpha = nullptr;
        for (const auto& [a, cum] : rs.cumulative) {
            if (u < cum) {
                alpha = &a;
                break;
            }
        }
        for (int t = 0; t < offspring.n; ++t) {
            for (unsigned c = 0; c < (*alpha)[t]; ++c) {
                if (static_cast<long>(nodes.size()) >= vertex_cap) {
                    out.cap_exceeded = true;
                    return out;
                }
                int cid = static_cast<int>(nodes.size());
                nodes.push_back({t, {}});
                nodes[id].child_ids.push_back(cid);
                frontier.push_back(cid);
            }
        }
    }

    // Preorder flattening (explicit stack; trees can be arbitrarily deep).
    out.tree.arity.reserve(nodes.size());
    out.tree.types.reserve(nodes.size());
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        out.tree.arity.push_back(static_cast<int>(nodes[id].child_ids.size()));
        out.tree.types.push_back(nodes[id].type);
        for (auto it = nodes[id].child_ids.rbegin(); it != nodes[id].child_ids.rend(); ++it)
            stack.push_back(*it);
    }
    return out;
}

} // namespace catlab
