#ifndef CATLAB_EXACT_LINALG_HPP
#define CATLAB_EXACT_LINALG_HPP

#include "catlab/rational.hpp"

#include <utility>
#include <vector>

namespace catlab {

using IntMatrix = std::vector<std::vector<Int>>;

struct EchelonResult {
    long rank = 0;
    /// Pivot (row, column) pairs in elimination order; after the in-place
    /// elimination, pivot r sits at matrix row r.
    std::vector<std::pair<long, long>> pivots;
};

/// Fraction-free (Bareiss) forward elimination, in place. Columns
/// [0, main_cols) are eliminated in order; any further columns are carried
/// along as an exact augmented block. Pivot rows are chosen by smallest
/// nonzero magnitude (ties: lowest row index). With `stop_early`, returns as
/// soon as the rank reaches min(rows, main_cols).
EchelonResult bareiss_echelon(IntMatrix& a, long main_cols, bool stop_early = false);

/// Solves A x = b by back-substitution on an echelon form produced by
/// bareiss_echelon, with free variables set to 0. `bcol` indexes the column
/// holding the transformed right-hand side. The caller must have verified
/// consistency (zero rhs on all rows past the rank).
std::vector<Rat> echelon_backsolve(const IntMatrix& a, const EchelonResult& ech, long main_cols,
                                   long bcol);

/// Clears denominators of each row by its LCM; scales the augmented part too,
/// preserving the solution set of [A | b].
IntMatrix clear_denominators(const std::vector<std::vector<Rat>>& rows);

} // namespace catlab

#endif
