#include "catlab/simplex.hpp"

#include "catlab/errors.hpp"

#include <stdexcept>

namespace catlab {

PhaseOneResult simplex_phase_one(const std::vector<std::vector<Rat>>& a,
                                 const std::vector<Rat>& b) {
    const long m = static_cast<long>(a.size());
    const long nv = m > 0 ? static_cast<long>(a[0].size()) : 0;
    if (static_cast<long>(b.size()) != m)
        throw InvalidParameterError("rhs length must match the row count");
    for (const Rat& v : b)
        if (v < 0) throw InvalidParameterError("phase-1 requires b >= 0");

    // Tableau [A | I | b] with artificial basis; minimize the artificial sum.
    const long total = nv + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < nv; ++j) t[i][j] = a[i][j];
        t[i][nv + i] = 1;
        t[i][total] = b[i];
    }
    std::vector<long> basis(m);
    for (long i = 0; i < m; ++i) basis[i] = nv + i;

    // Reduced-cost row for cost c = (0..0, 1..1): start at c_j - colsum_j.
    std::vector<Rat> cost(total + 1, Rat(0));
    for (long j = 0; j <= total; ++j) {
        Rat colsum = 0;
        for (long i = 0; i < m; ++i) colsum += t[i][j];
        cost[j] = (j >= nv && j < total ? Rat(1) : Rat(0)) - colsum;
    }

    while (true) {
        long entering = -1;
        for (long j = 0; j < total; ++j) {
            if (cost[j] < 0) {
                entering = j; // Bland: lowest eligible index
                break;
            }
        }
        if (entering < 0) break;

        long leaving = -1;
        Rat best_ratio;
        for (long i = 0; i < m; ++i) {
            if (t[i][entering] <= 0) continue;
            Rat ratio = t[i][total] / t[i][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) throw std::logic_error("phase-1 objective unbounded; impossible");

        // Pivot.
        Rat piv = t[leaving][entering];
        for (long j = 0; j <= total; ++j) t[leaving][j] /= piv;
        for (long i = 0; i < m; ++i) {
            if (i == leaving || t[i][entering] == 0) continue;
            Rat f = t[i][entering];
            for (long j = 0; j <= total; ++j) t[i][j] -= f * t[leaving][j];
        }
        if (cost[entering] != 0) {
            Rat f = cost[entering];
            for (long j = 0; j <= total; ++j) cost[j] -= f * t[leaving][j];
        }
        basis[leaving] = entering;
    }

    Rat objective = 0;
    for (long i = 0; i < m; ++i)
        if (basis[i] >= nv) objective += t[i][total];

    PhaseOneResult out;
    if (objective == 0) {
        out.feasible = true;
        out.x.assign(nv, Rat(0));
        for (long i = 0; i < m; ++i)
            if (basis[i] < nv) out.x[basis[i]] = t[i][total];
        return out;
    }

    // Farkas certificate from the multipliers: y_i = 1 - cbar_{artificial i}.
    out.feasible = false;
    out.farkas.assign(m, Rat(0));
    for (long i = 0; i < m; ++i) out.farkas[i] = Rat(1) - cost[nv + i];

    // The certificate is part of the contract; fail loudly if it does not
    // verify rather than hand back a bogus proof.
    Rat yb = 0;
    for (long i = 0; i < m; ++i) yb += out.farkas[i] * b[i];
    if (yb <= 0) throw std::logic_error("farkas certificate failed y^T b > 0");
    for (long j = 0; j < nv; ++j) {
        Rat ya = 0;
        for (long i = 0; i < m; ++i) ya += out.farkas[i] * a[i][j];
        if (ya > 0) throw std::logic_error("farkas certificate failed y^T A <= 0");
    }
    return out;
}

} // namespace catlab
