#ifndef CATLAB_GW_HPP
#define CATLAB_GW_HPP

#include "catlab/multi_index.hpp"
#include "catlab/rng.hpp"

#include <map>
#include <vector>

namespace catlab {

/// Multi-type offspring distribution: for each type i a finite-support
/// probability mass (h_{i,alpha}) over Z^n_{>=0}, exact rationals, each row
/// summing to exactly 1. The alpha = 0 mass d_i is stored explicitly; d_i = 0
/// is allowed (sampling may then legitimately never terminate).
struct OffspringDistribution {
    int n = 0;
    std::vector<std::map<MultiIndex, Rat>> rows; // rows[i]: alpha -> mass

    /// Builds and validates. When a row has no alpha = 0 entry, the leaf mass
    /// is derived as 1 - sum of the others (which must lie in [0,1]).
    static OffspringDistribution make(int n, std::vector<std::map<MultiIndex, Rat>> rows);

    Rat leaf_mass(int type) const;
    /// d^alpha = prod_i d_i^{alpha_i}.
    Rat leaf_mass_power(const MultiIndex& alpha) const;
    /// Eq-GWo condition: every nonzero-alpha row sum < 1, i.e. all d_i > 0.
    bool strictly_substochastic() const;
};

/// Finite ordered n-type tree in preorder: arities (child counts) and types.
/// Children of every vertex are ordered with smaller types to the left.
struct OrderedTypedTree {
    std::vector<int> arity;
    std::vector<int> types; // 0-based

    int size() const { return static_cast<int>(arity.size()); }
    MultiIndex leaftype(int n) const;
};

/// Outcome of one Galton-Watson draw. Exceeding the vertex cap is a distinct
/// outcome (the tree may genuinely be infinite), not an error.
struct GwSample {
    bool cap_exceeded = false;
    OrderedTypedTree tree;
};

/// Grows the tree generation by generation, each vertex drawing its offspring
/// multi-index by exact-rational inverse CDF over the row's support in
/// lexicographic order.
GwSample sample_gw_multitype(const OffspringDistribution& offspring, int root_type, Rng& rng,
                             long vertex_cap);

} // namespace catlab

#endif
