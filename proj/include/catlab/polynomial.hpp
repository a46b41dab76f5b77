#ifndef CATLAB_POLYNOMIAL_HPP
#define CATLAB_POLYNOMIAL_HPP

#include "catlab/multi_index.hpp"

#include <map>

namespace catlab {

/// Sparse multivariate polynomial over the rationals, keyed by exponent
/// multi-index. Supports the exact symbolic work the lab needs (Jacobian
/// powers, truncated series composition); nothing fancier.
struct Polynomial {
    int n = 0;
    std::map<MultiIndex, Rat> terms;

    Polynomial() = default;
    explicit Polynomial(int vars) : n(vars) {}

    static Polynomial monomial(int vars, const MultiIndex& alpha, const Rat& c);
    static Polynomial variable(int vars, int j);

    void add_term(const MultiIndex& alpha, const Rat& c);
    Rat coeff(const MultiIndex& alpha) const;
    bool is_zero() const { return terms.empty(); }
    unsigned long degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;

    /// Product with every monomial of degree > maxdeg dropped eagerly.
    Polynomial mul_truncated(const Polynomial& o, unsigned long maxdeg) const;
    /// Drops all terms of degree > maxdeg.
    Polynomial truncated(unsigned long maxdeg) const;

    Polynomial derivative(int j) const;
};

} // namespace catlab

#endif
