#ifndef CATLAB_SAMPLER_HPP
#define CATLAB_SAMPLER_HPP

#include "catlab/catalan.hpp"
#include "catlab/rng.hpp"
#include "catlab/tree.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace catlab {

/// The split law P_k^(d)(k_1..k_d) = prod C_{k_i} / C_k over compositions of
/// k-1 driving the top-down uniform tree sampler. Exact rationals throughout.
struct SplitDistribution {
    int d;
    long k;

    Rat mass(const std::vector<long>& parts) const;
    /// Every composition with its mass, lexicographically; test scale only.
    std::vector<std::pair<std::vector<long>, Rat>> masses() const;
    Rat total_mass() const;
};

/// Draws an exactly uniform element of C_k^(d) by recursive splitting with
/// exact-rational inverse CDF (big-integer weights, no floating point).
CatalanTree sample_uniform(int degree, long k, Rng& rng);
CatalanTree sample_uniform(int degree, long k, std::uint64_t seed);

struct PerfectWitness {
    bool perfect = false;
    std::vector<int> witness_code; // code of v_p when perfect
};

/// True iff T contains an ancestral path (v_0..v_p) all of whose off-path
/// siblings are leaves; the witness is the code of the path endpoint v_p
/// (first such vertex in preorder).
PerfectWitness p_perfect_witness(const CatalanTree& tree, int p);
bool is_p_perfect(const CatalanTree& tree, int p);

double kappa_pd(int p, int d);
/// e^{-kappa_{p,d} (k-p)_+}.
double perfect_bound(int p, int d, long k);

struct PerfectStats {
    int d = 0;
    int p = 0;
    long k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0; // samples that are NOT p-perfect
    Rat rate;
    double bound_approx = 0.0;
    double kappa_approx = 0.0;
};

/// Monte-Carlo estimate of Q_{p,d}(k), deterministic under a fixed seed and
/// independent of the worker count.
PerfectStats estimate_Q(int degree, int p, long k, std::uint64_t trials, std::uint64_t seed,
                        int workers = 1);

/// (# non-p-perfect trees) / C_k^(d) by exhaustive enumeration.
Rat exact_Q(int degree, int p, long k, long cap = kDefaultTreeCap);

struct RootChildrenRate {
    int d = 0;
    long k = 0;
    Rat exact;        // d C_{k-1}/C_k
    Rat limit;        // (1 - 1/d)^{d-1}, the k -> infinity value
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    Rat empirical;
};

/// Probability that at least d-1 of the root children are leaves.
RootChildrenRate rootchildren_leaf_rate(int degree, long k, std::uint64_t trials,
                                        std::uint64_t seed, int workers = 1);

/// True when generations 1..p of T each contain at most one internal vertex.
bool generations_sparse(const CatalanTree& tree, int p);

} // namespace catlab

#endif
