#include "catlab/polynomial.hpp"

namespace catlab {

Polynomial Polynomial::monomial(int vars, const MultiIndex& alpha, const Rat& c) {
    Polynomial p(vars);
    p.add_term(alpha, c);
    return p;
}

Polynomial Polynomial::variable(int vars, int j) {
    return monomial(vars, MultiIndex::unit(vars, j), Rat(1));
}

void Polynomial::add_term(const MultiIndex& alpha, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rat Polynomial::coeff(const MultiIndex& alpha) const {
    auto it = terms.find(alpha);
    return it == terms.end() ? Rat(0) : it->second;
}

unsigned long Polynomial::degree() const {
    unsigned long d = 0;
    for (const auto& [alpha, c] : terms) d = std::max(d, alpha.weight());
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [alpha, c] : o.terms) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [alpha, c] : o.terms) add_term(alpha, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(n);
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : o.terms) r.add_term(a + b, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(n);
    if (c == 0) return r;
    for (const auto& [a, ca] : terms) r.terms[a] = ca * c;
    return r;
}

Polynomial Polynomial::mul_truncated(const Polynomial& o, unsigned long maxdeg) const {
    Polynomial r(n);
    for (const auto& [a, ca] : terms) {
        unsigned long wa = a.weight();
        if (wa > maxdeg) continue;
        for (const auto& [b, cb] : o.terms) {
            if (wa + b.weight() > maxdeg) continue;
            r.add_term(a + b, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::truncated(unsigned long maxdeg) const {
    Polynomial r(n);
    for (const auto& [a, c] : terms)
        if (a.weight() <= maxdeg) r.terms[a] = c;
    return r;
}

Polynomial Polynomial::derivative(int j) const {
    Polynomial r(n);
    for (const auto& [a, c] : terms) {
        if (a[j] == 0) continue;
        MultiIndex b = a;
        --b[j];
        r.add_term(b, c * Rat(static_cast<long>(a[j])));
    }
    return r;
}

} // namespace catlab
