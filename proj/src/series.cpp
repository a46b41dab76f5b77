#include "catlab/series.hpp"

#include "catlab/errors.hpp"

namespace catlab {

TruncatedSeriesMap::TruncatedSeriesMap(int vars, unsigned long cap)
    : n(vars), degree_cap(cap), components(vars, Polynomial(vars)) {}

TruncatedSeriesMap TruncatedSeriesMap::identity(int vars, unsigned long cap) {
    TruncatedSeriesMap f(vars, cap);
    for (int i = 0; i < vars; ++i) f.components[i] = Polynomial::variable(vars, i);
    return f;
}

TruncatedSeriesMap TruncatedSeriesMap::from_table(const CoefficientTable& H, unsigned long cap) {
    TruncatedSeriesMap f = identity(H.n, cap);
    for (const auto& [key, value] : H.entries) {
        const auto& [i, alpha] = key;
        if (alpha.weight() > cap) continue;
        Rat divided = value / Rat(alpha.fact());
        f.components[i].add_term(alpha, -divided);
    }
    return f;
}

TruncatedSeriesMap TruncatedSeriesMap::from_undivided(
    int vars, const std::vector<std::map<MultiIndex, Rat>>& h, unsigned long cap) {
    TruncatedSeriesMap f = identity(vars, cap);
    for (int i = 0; i < vars; ++i) {
        for (const auto& [alpha, mass] : h[i]) {
            if (alpha.is_zero() || alpha.weight() > cap) continue;
            f.components[i].add_term(alpha, -mass);
        }
    }
    return f;
}

std::vector<std::vector<Rat>> TruncatedSeriesMap::linear_matrix() const {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = components[i].coeff(MultiIndex::unit(n, j));
    return m;
}

bool TruncatedSeriesMap::equals_identity() const {
    for (int i = 0; i < n; ++i) {
        Polynomial diff = components[i] - Polynomial::variable(n, i);
        if (!diff.is_zero()) return false;
    }
    return true;
}

TruncatedSeriesMap TruncatedSeriesMap::truncated(unsigned long cap) const {
    TruncatedSeriesMap f(n, cap);
    for (int i = 0; i < n; ++i) f.components[i] = components[i].truncated(cap);
    return f;
}

TruncatedSeriesMap compose(const TruncatedSeriesMap& f, const TruncatedSeriesMap& g,
                           unsigned long cap) {
    if (f.n != g.n) throw InvalidParameterError("composition dimension mismatch");
    for (int j = 0; j < g.n; ++j)
        if (g.components[j].coeff(MultiIndex(static_cast<std::size_t>(g.n))) != 0)
            throw InvalidParameterError("composition requires zero constant term");

    // Powers of each G_j, built on demand and truncated throughout.
    std::vector<std::vector<Polynomial>> powers(g.n);
    auto g_power = [&](int j, unsigned e) -> const Polynomial& {
        auto& table = powers[j];
        if (table.empty()) {
            Polynomial one(g.n);
            one.add_term(MultiIndex(static_cast<std::size_t>(g.n)), Rat(1));
            table.push_back(std::move(one));
        }
        while (table.size() <= e)
            table.push_back(table.back().mul_truncated(g.components[j], cap));
        return table[e];
    };

    TruncatedSeriesMap out(f.n, cap);
    for (int i = 0; i < f.n; ++i) {
        for (const auto& [alpha, c] : f.components[i].terms) {
            if (alpha.weight() > cap) continue;
            Polynomial term(g.n);
            term.add_term(MultiIndex(static_cast<std::size_t>(g.n)), c);
            // Every G_j has zero constant term, so X^alpha contributes only
            // terms of degree >= |alpha|; skip once that exceeds the cap.
            unsigned long min_degree = alpha.weight();
            if (min_degree > cap) continue;
            for (int j = 0; j < g.n && !term.is_zero(); ++j)
                if (alpha[j] > 0) term = term.mul_truncated(g_power(j, alpha[j]), cap);
            out.components[i] += term;
        }
    }
    return out;
}

TruncatedSeriesMap truncated_inverse(const TruncatedSeriesMap& f, unsigned long degree) {
    const int n = f.n;
    const MultiIndex zero(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (f.components[i].coeff(zero) != 0)
            throw InvalidParameterError("inverse requires zero constant term");

    // Invert the linear part exactly (Gauss-Jordan on [M | I]).
    auto m = f.linear_matrix();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularLinearPartError("linear part of the series is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat scale = m[col][col];
        for (int j = 0; j < n; ++j) {
            m[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }

    // G_1 = M^{-1}; unknowns of degree m are determined by lower degrees via
    // the degree-m part of F(G) = X.
    TruncatedSeriesMap g(n, degree);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (inv[i][j] != 0) g.components[i].add_term(MultiIndex::unit(n, j), inv[i][j]);

    for (unsigned long m_deg = 2; m_deg <= degree; ++m_deg) {
        TruncatedSeriesMap fg = compose(f, g, m_deg);
        for (int i = 0; i < n; ++i)
            fg.components[i] -= Polynomial::variable(n, i);
        // Residual E is zero below degree m by induction; cancel its degree-m
        // coefficients through the linear part.
        std::map<MultiIndex, std::vector<Rat>> corrections;
        for (int i = 0; i < n; ++i) {
            for (const auto& [alpha, c] : fg.components[i].terms) {
                if (alpha.weight() != m_deg || c == 0) continue;
                auto [it, inserted] = corrections.emplace(alpha, std::vector<Rat>(n, Rat(0)));
                it->second[i] = c;
            }
        }
        for (const auto& [alpha, e_vec] : corrections) {
            for (int i = 0; i < n; ++i) {
                Rat delta = 0;
                for (int j = 0; j < n; ++j)
                    if (inv[i][j] != 0 && e_vec[j] != 0) delta += inv[i][j] * e_vec[j];
                if (delta != 0) g.components[i].add_term(alpha, -delta);
            }
        }
    }
    return g;
}

} // namespace catlab
