#ifndef CATLAB_SIMPLEX_HPP
#define CATLAB_SIMPLEX_HPP

#include "catlab/rational.hpp"

#include <vector>

namespace catlab {

/// Exact-rational Phase-1 simplex with Bland's rule for the feasibility of
/// {A x = b, x >= 0} with b >= 0. Bland's rule guarantees termination; all
/// pivoting is exact. On infeasibility, `farkas` is a rational certificate
/// with y^T A <= 0 componentwise and y^T b > 0.
struct PhaseOneResult {
    bool feasible = false;
    std::vector<Rat> x;      // a feasible point, when feasible
    std::vector<Rat> farkas; // the certificate, when infeasible
};

PhaseOneResult simplex_phase_one(const std::vector<std::vector<Rat>>& a,
                                 const std::vector<Rat>& b);

} // namespace catlab

#endif
