#ifndef CATLAB_SERIES_HPP
#define CATLAB_SERIES_HPP

#include "catlab/coefficients.hpp"
#include "catlab/polynomial.hpp"

#include <vector>

namespace catlab {

/// Power-series mapping truncated at total degree D: one sparse component per
/// coordinate, exact rational coefficients. Composition and subtraction close
/// over degree <= D (higher monomials are dropped eagerly).
struct TruncatedSeriesMap {
    int n = 0;
    unsigned long degree_cap = 0;
    std::vector<Polynomial> components;

    TruncatedSeriesMap() = default;
    TruncatedSeriesMap(int vars, unsigned long cap);

    static TruncatedSeriesMap identity(int vars, unsigned long cap);
    /// F = I - sum H_{i,alpha}/alpha! X^alpha from a homogeneous table.
    static TruncatedSeriesMap from_table(const CoefficientTable& H, unsigned long cap);
    /// F = I - sum h_{i,alpha} X^alpha from undivided coefficients
    /// (i, alpha) -> h; alpha = 0 entries are ignored.
    static TruncatedSeriesMap from_undivided(
        int vars, const std::vector<std::map<MultiIndex, Rat>>& h, unsigned long cap);

    Rat coeff(int i, const MultiIndex& alpha) const { return components[i].coeff(alpha); }
    /// Componentwise coefficients of the linear part.
    std::vector<std::vector<Rat>> linear_matrix() const;
    bool equals_identity() const;

    TruncatedSeriesMap truncated(unsigned long cap) const;
};

/// (F o G)_i = F_i(G_1..G_n), truncated at `cap`. Requires G to have zero
/// constant term.
TruncatedSeriesMap compose(const TruncatedSeriesMap& f, const TruncatedSeriesMap& g,
                           unsigned long cap);

/// Degree-by-degree compositional inverse: returns G with F o G = G o F = I
/// through the requested degree. Throws SingularLinearPartError when the
/// linear part of F is not invertible. Purely formal; no analytic hypothesis
/// beyond linear-part invertibility is checked or needed.
TruncatedSeriesMap truncated_inverse(const TruncatedSeriesMap& f, unsigned long degree);

} // namespace catlab

#endif
