#ifndef CATLAB_COEFFICIENTS_HPP
#define CATLAB_COEFFICIENTS_HPP

#include "catlab/multi_index.hpp"

#include <map>
#include <utility>

namespace catlab {

/// Sparse table H = (H_{i,alpha} : i in [n], |alpha| = d) of exact rational
/// coefficients for a degree-d homogeneous map H_i = sum H_{i,alpha}/alpha! X^alpha.
/// Missing entries read as 0. Types are 0-based here; the JSON layer is 1-based.
struct CoefficientTable {
    int n = 1;
    int d = 2;
    std::map<std::pair<int, MultiIndex>, Rat> entries;

    CoefficientTable() = default;
    CoefficientTable(int n_types, int degree);

    void set(int i, const MultiIndex& alpha, const Rat& value);
    Rat get(int i, const MultiIndex& alpha) const;
    /// h_{i,alpha} = H_{i,alpha} / alpha!.
    Rat divided(int i, const MultiIndex& alpha) const;
    /// L = max |H_{i,alpha}|.
    Rat max_abs() const;
    bool is_zero() const;
};

} // namespace catlab

#endif
