#include "catlab/chain.hpp"

#include "catlab/exact_linalg.hpp"
#include "catlab/simplex.hpp"

#include <algorithm>

namespace catlab {

namespace {

std::vector<int> eligible_vertices(const CatalanTree& tree, int p) {
    std::vector<int> out;
    for (int v = 0; v < tree.size(); ++v)
        if (tree.depth(v) >= p) out.push_back(v);
    return out;
}

void require_chain_defined(const std::vector<CatalanTree>& trees, int p) {
    for (const CatalanTree& tree : trees) {
        if (tree.height() < p)
            throw ChainUndefinedError("tree " + tree.encoding() + " has height " +
                                      std::to_string(tree.height()) + " < p = " +
                                      std::to_string(p) + "; no vertex rule exists");
    }
}

} // namespace

VertexRule VertexRule::uniform_eligible(const std::vector<CatalanTree>& trees, int p) {
    require_chain_defined(trees, p);
    VertexRule rule;
    rule.masses.resize(trees.size());
    for (std::size_t t = 0; t < trees.size(); ++t) {
        std::vector<int> vs = eligible_vertices(trees[t], p);
        Rat mass(1, static_cast<long>(vs.size()));
        mass.canonicalize();
        for (int v : vs) rule.masses[t].emplace_back(v, mass);
    }
    return rule;
}

void VertexRule::validate(const std::vector<CatalanTree>& trees, int p) const {
    if (masses.size() != trees.size())
        throw InvalidParameterError("vertex rule must cover every tree");
    for (std::size_t t = 0; t < trees.size(); ++t) {
        Rat total = 0;
        for (const auto& [v, mass] : masses[t]) {
            if (mass < 0) throw InvalidParameterError("vertex rule masses must be >= 0");
            if (mass > 0 && trees[t].depth(v) < p)
                throw InvalidParameterError("vertex rule puts mass below height p");
            total += mass;
        }
        if (total != 1)
            throw InvalidParameterError("vertex rule row does not sum to exactly 1");
    }
}

ShuffleKernel build_kernel(int degree, long k, int p, long cap) {
    std::vector<CatalanTree> trees = enumerate_trees(degree, k, cap);
    return build_kernel(degree, k, p, VertexRule::uniform_eligible(trees, p), cap);
}

ShuffleKernel build_kernel(int degree, long k, int p, const VertexRule& rule, long cap) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    std::vector<CatalanTree> trees = enumerate_trees(degree, k, cap);
    require_chain_defined(trees, p);
    rule.validate(trees, p);

    ShuffleKernel kernel;
    kernel.d = degree;
    kernel.k = k;
    kernel.p = p;
    std::map<std::string, int> row_of;
    for (std::size_t t = 0; t < trees.size(); ++t) {
        kernel.tree_encodings.push_back(trees[t].encoding());
        row_of[kernel.tree_encodings.back()] = static_cast<int>(t);
    }
    kernel.matrix.assign(trees.size(), std::vector<Rat>(trees.size(), Rat(0)));
    for (std::size_t t = 0; t < trees.size(); ++t) {
        for (const auto& [v, mass] : rule.masses[t]) {
            if (mass == 0) continue;
            ShuffleClass cls = shuffle_class_at(trees[t], v, p);
            Rat share = mass / Rat(static_cast<long>(cls.members.size()));
            for (const std::string& enc : cls.members)
                kernel.matrix[t][row_of.at(enc)] += share;
        }
    }
    return kernel;
}

std::vector<StationaryClass> stationary_distribution(const ShuffleKernel& kernel) {
    const long m = static_cast<long>(kernel.tree_encodings.size());

    // Communicating classes: positive transitions are reversible here, so the
    // classes are connected components of the support graph.
    std::vector<int> component(m, -1);
    int components = 0;
    for (long s = 0; s < m; ++s) {
        if (component[s] >= 0) continue;
        std::vector<long> stack{s};
        component[s] = components;
        while (!stack.empty()) {
            long u = stack.back();
            stack.pop_back();
            for (long v = 0; v < m; ++v) {
                if (component[v] >= 0) continue;
                if (kernel.matrix[u][v] != 0 || kernel.matrix[v][u] != 0) {
                    component[v] = components;
                    stack.push_back(v);
                }
            }
        }
        ++components;
    }

    std::vector<StationaryClass> out(components);
    for (long s = 0; s < m; ++s) out[component[s]].states.push_back(static_cast<int>(s));

    for (StationaryClass& cls : out) {
        const long sz = static_cast<long>(cls.states.size());
        // Rows: stationarity sum_i pi_i (K[i][j] - delta_ij) = 0 per state j,
        // then the normalization row sum pi = 1.
        std::vector<std::vector<Rat>> rows(sz + 1, std::vector<Rat>(sz + 1, Rat(0)));
        for (long j = 0; j < sz; ++j) {
            for (long i = 0; i < sz; ++i) {
                rows[j][i] = kernel.matrix[cls.states[i]][cls.states[j]];
                if (i == j) rows[j][i] -= 1;
            }
        }
        for (long i = 0; i < sz; ++i) rows[sz][i] = 1;
        rows[sz][sz] = 1; // rhs

        IntMatrix a = clear_denominators(rows);
        EchelonResult ech = bareiss_echelon(a, sz);
        for (long r = ech.rank; r < sz + 1; ++r)
            if (a[r][sz] != 0) throw std::logic_error("stationary system inconsistent");
        if (ech.rank < sz)
            throw std::logic_error("stationary distribution not unique within a class");
        cls.pi = echelon_backsolve(a, ech, sz, sz);
    }
    return out;
}

FeasibilityResult uniform_feasibility(int degree, long k, int p, long cap, long lp_cell_cap) {
    std::vector<CatalanTree> trees = enumerate_trees(degree, k, cap);
    require_chain_defined(trees, p);

    FeasibilityResult out;
    const long m = static_cast<long>(trees.size());
    std::map<std::string, int> row_of;
    for (long t = 0; t < m; ++t) {
        out.tree_encodings.push_back(trees[t].encoding());
        row_of[out.tree_encodings.back()] = static_cast<int>(t);
    }

    out.variable_vertices.resize(m);
    std::vector<std::pair<int, int>> variables; // (tree, vertex)
    for (long t = 0; t < m; ++t) {
        out.variable_vertices[t] = eligible_vertices(trees[t], p);
        for (int v : out.variable_vertices[t]) variables.emplace_back(static_cast<int>(t), v);
    }
    const long nv = static_cast<long>(variables.size());
    if ((2 * m) * nv > lp_cell_cap)
        throw CapExceededError("uniform-feasibility LP tableau would exceed the cell cap");

    // Constraints: (i) each tree's rule sums to 1; (ii) uniform balance
    // sum_{T,v} P_T(v) 1{T' in Sh}/#Sh = 1 for every target tree T'.
    std::vector<std::vector<Rat>> a(2 * m, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> b(2 * m, Rat(1));
    for (long col = 0; col < nv; ++col) {
        auto [t, v] = variables[col];
        a[t][col] = 1;
        ShuffleClass cls = shuffle_class_at(trees[t], v, p);
        Rat share(1, static_cast<long>(cls.members.size()));
        share.canonicalize();
        for (const std::string& enc : cls.members) a[m + row_of.at(enc)][col] += share;
    }

    PhaseOneResult lp = simplex_phase_one(a, b);
    out.feasible = lp.feasible;
    if (!lp.feasible) {
        out.farkas = lp.farkas;
        return out;
    }

    out.rule.masses.resize(m);
    for (long col = 0; col < nv; ++col) {
        auto [t, v] = variables[col];
        out.rule.masses[t].emplace_back(v, lp.x[col]);
    }
    out.rule.validate(trees, p);

    // End-to-end re-verification: the claimed rule's kernel must hold the
    // uniform vector exactly (rows sum to 1 already, so column sums of 1 are
    // equivalent).
    ShuffleKernel kernel = build_kernel(degree, k, p, out.rule, cap);
    for (long j = 0; j < m; ++j) {
        Rat colsum = 0;
        for (long i = 0; i < m; ++i) colsum += kernel.matrix[i][j];
        if (colsum != 1) throw std::logic_error("feasible rule failed uniform re-verification");
    }
    return out;
}

std::map<std::string, Rat> lambda_from_rule(const std::vector<CatalanTree>& trees,
                                            const VertexRule& rule, int p) {
    std::map<std::string, Rat> lambda;
    for (std::size_t t = 0; t < trees.size(); ++t) {
        for (const auto& [v, mass] : rule.masses[t]) {
            if (mass == 0) continue;
            ShuffleClass cls = shuffle_class_at(trees[t], v, p);
            lambda[cls.key] += mass / Rat(static_cast<long>(cls.members.size()));
        }
    }
    return lambda;
}

} // namespace catlab
