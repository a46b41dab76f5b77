#include "catlab/exact_linalg.hpp"

#include <stdexcept>

namespace catlab {

EchelonResult bareiss_echelon(IntMatrix& a, long main_cols, bool stop_early) {
    EchelonResult out;
    const long rows = static_cast<long>(a.size());
    if (rows == 0) return out;
    const long total_cols = static_cast<long>(a[0].size());
    const long max_rank = std::min(rows, main_cols);

    Int prev = 1;
    long r = 0;
    for (long col = 0; col < main_cols && r < rows; ++col) {
        // Smallest nonzero magnitude keeps the fraction-free entries tame.
        long pivot_row = -1;
        for (long i = r; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            if (pivot_row < 0 ||
                mpz_cmpabs(a[i][col].get_mpz_t(), a[pivot_row][col].get_mpz_t()) < 0)
                pivot_row = i;
        }
        if (pivot_row < 0) continue;
        std::swap(a[r], a[pivot_row]);
        const Int piv = a[r][col];
        for (long i = r + 1; i < rows; ++i) {
            const Int factor = a[i][col];
            // Whole-row update is the identity only in this case.
            if (factor == 0 && piv == prev) continue;
            for (long j = col; j < total_cols; ++j) {
                Int t = piv * a[i][j] - factor * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
        }
        prev = piv;
        out.pivots.emplace_back(r, col);
        ++r;
        if (stop_early && r == max_rank) break;
    }
    out.rank = r;
    return out;
}

std::vector<Rat> echelon_backsolve(const IntMatrix& a, const EchelonResult& ech, long main_cols,
                                   long bcol) {
    std::vector<Rat> x(static_cast<std::size_t>(main_cols), Rat(0));
    for (long r = ech.rank - 1; r >= 0; --r) {
        const long col = ech.pivots[r].second;
        Rat rhs(a[r][bcol]);
        for (long j = col + 1; j < main_cols; ++j) {
            if (a[r][j] == 0 || x[j] == 0) continue;
            rhs -= Rat(a[r][j]) * x[j];
        }
        x[col] = rhs / Rat(a[r][col]);
    }
    return x;
}

IntMatrix clear_denominators(const std::vector<std::vector<Rat>>& rows) {
    IntMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Int l = 1;
        for (const Rat& q : rows[i]) l = l / gcd(l, Int(q.get_den())) * q.get_den();
        out[i].reserve(rows[i].size());
        for (const Rat& q : rows[i]) {
            Int scaled = q.get_num() * (l / q.get_den());
            out[i].push_back(std::move(scaled));
        }
    }
    return out;
}

} // namespace catlab
