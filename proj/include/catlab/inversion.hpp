#ifndef CATLAB_INVERSION_HPP
#define CATLAB_INVERSION_HPP

#include "catlab/catalan.hpp"
#include "catlab/coefficients.hpp"
#include "catlab/gw.hpp"
#include "catlab/series.hpp"

#include <cstdint>
#include <optional>

namespace catlab {

/// Inverse-series coefficient g_{i,alpha} of F = I - H for homogeneous
/// degree-d H, via the tree sum (1/(d!)^k) sum over C_k^(d) of the average
/// H-weights, with k = (|alpha|-1)/(d-1). Throws InvalidDegreeError when
/// |alpha|-1 is not a multiple of d-1.
Rat inverse_coefficient(const CoefficientTable& H, int i, const MultiIndex& alpha,
                        long cap = kDefaultTreeCap);

/// |g_{i,alpha}| against the unconditional coefficient bound
/// (1/(d!)^k) C_k^(d) n^{k-1} (|alpha|!/alpha!) L^k, optionally refined by a
/// span deficit ||phi - 1||_1.
struct BoundReport {
    long k = 0;
    Rat g;
    Rat g_abs;
    Rat l_value;
    Rat bound;
    bool holds = false;
    std::optional<Rat> deficit;
    std::optional<Rat> refined_bound;
    std::optional<bool> refined_holds;
};

BoundReport coefficient_bound_report(const CoefficientTable& H, int i, const MultiIndex& alpha,
                                     std::optional<Rat> span_deficit = std::nullopt,
                                     long cap = kDefaultTreeCap);

/// Monte-Carlo check of the leaf-type law: the probability that a
/// Galton-Watson tree with root type i is finite with leaf type alpha equals
/// d^alpha g_{i,alpha}, with g the inverse-series coefficients of
/// F_i = X_i - sum h_{i,alpha} X^alpha (undivided coefficients).
struct GwLeafLawReport {
    int root_type = 0;
    MultiIndex alpha;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    std::uint64_t cap_exceeded = 0; // counted as infinite trees
    long vertex_cap = 0;
    Rat exact;
    Rat empirical;
    double z_score = 0.0;
};

GwLeafLawReport verify_gw_leaf_law(const OffspringDistribution& offspring, int root_type,
                                   const MultiIndex& alpha, std::uint64_t trials,
                                   std::uint64_t seed, long vertex_cap = 200000,
                                   int workers = 1);

} // namespace catlab

#endif
