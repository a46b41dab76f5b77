#ifndef CATLAB_CHAIN_HPP
#define CATLAB_CHAIN_HPP

#include "catlab/catalan.hpp"
#include "catlab/shuffle.hpp"
#include "catlab/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace catlab {

/// Per-tree probability mass over the vertices of height >= p (the chain's
/// path-selection rule). Masses are exact and sum to 1 for every tree.
struct VertexRule {
    /// masses[t] lists (vertex position in tree t, mass).
    std::vector<std::vector<std::pair<int, Rat>>> masses;

    /// Uniform over eligible vertices; throws ChainUndefinedError (naming the
    /// offending tree) when some tree has no vertex of height >= p.
    static VertexRule uniform_eligible(const std::vector<CatalanTree>& trees, int p);
    void validate(const std::vector<CatalanTree>& trees, int p) const;
};

/// Exact transition matrix of the p-shuffle chain on C_k^(d): from T, pick an
/// eligible vertex by P_T, then a uniform member of its shuffle class.
struct ShuffleKernel {
    int d = 0;
    long k = 0;
    int p = 0;
    std::vector<std::string> tree_encodings;
    std::vector<std::vector<Rat>> matrix; // rows sum to exactly 1
};

ShuffleKernel build_kernel(int degree, long k, int p, long cap = kDefaultTreeCap);
ShuffleKernel build_kernel(int degree, long k, int p, const VertexRule& rule,
                           long cap = kDefaultTreeCap);

/// Stationary distributions, one per closed communicating class (reachability
/// is symmetric for shuffle kernels, so classes are the connected components
/// of the support graph). Each solves pi K = pi, sum pi = 1 exactly.
struct StationaryClass {
    std::vector<int> states;
    std::vector<Rat> pi;
};

std::vector<StationaryClass> stationary_distribution(const ShuffleKernel& kernel);

/// Exact LP feasibility of uniform stationarity: does some
/// vertex rule make the uniform distribution stationary? Feasible answers
/// carry the rule (re-verified end to end); infeasible answers carry a
/// rational Farkas certificate over the constraint rows.
struct FeasibilityResult {
    bool defined = true;
    bool feasible = false;
    VertexRule rule;
    std::vector<std::string> tree_encodings;
    std::vector<std::vector<int>> variable_vertices; // per tree, eligible positions
    std::vector<Rat> farkas;
};

FeasibilityResult uniform_feasibility(int degree, long k, int p, long cap = kDefaultTreeCap,
                                      long lp_cell_cap = 4'000'000);

/// Score extraction from a vertex rule: lambda_S = sum_{T,v} P_T(v)/#Sh 1{Sh = S}.
/// For a rule whose kernel is uniform-stationary these satisfy
/// sum_S lambda_S 1_S == 1.
std::map<std::string, Rat> lambda_from_rule(const std::vector<CatalanTree>& trees,
                                            const VertexRule& rule, int p);

} // namespace catlab

#endif
