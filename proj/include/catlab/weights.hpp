#ifndef CATLAB_WEIGHTS_HPP
#define CATLAB_WEIGHTS_HPP

#include "catlab/catalan.hpp"
#include "catlab/coefficients.hpp"
#include "catlab/labelled.hpp"
#include "catlab/polynomial.hpp"
#include "catlab/tree.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catlab {

/// H-weight of a labelled tree: product over internal vertices v of
/// H_{tau(v), mu(v)}; the empty product (single leaf) is 1.
Rat h_weight(const LabelledTree& lt, const CoefficientTable& H);

/// Sum of H-weights over all labellings of T with the given root type, an
/// optional pinned leaf (position, type) excluded from the leaf budget, and
/// exactly alpha_l remaining leaves of type l. The workhorse behind both the
/// average H-weight and the fern sums: internal types are enumerated
/// (n^{k-1} assignments) and leaf types are placed as per-vertex multisets
/// with multinomial arity factors, pruning on zero coefficients.
Rat labelling_sum(const CatalanTree& tree, int root_type,
                  std::optional<std::pair<int, int>> pinned_leaf, const MultiIndex& alpha,
                  const CoefficientTable& H);

/// E_{i,alpha,H}(T); requires |alpha| = (d-1)k + 1.
Rat average_h_weight(const CatalanTree& tree, int i, const MultiIndex& alpha,
                     const CoefficientTable& H);

/// Number of (i,alpha) labellings of any T with k internal vertices:
/// n^{k-1} |alpha|!/alpha! (independent of the tree shape).
Int labelling_count(long k, int n, const MultiIndex& alpha);

/// The canonical d-ary fern of height p: the spine descends through the last
/// child in every generation and the sink is the spine endpoint (d,d,...,d).
CatalanTree canonical_fern(int degree, int p);
std::vector<int> canonical_fern_sink(int degree, int p);

/// Any fern: spine child positions (1-based, length p) choose which child
/// carries the spine in each generation; the sink is the spine endpoint.
CatalanTree fern_with_spine(int degree, const std::vector<int>& spine_children);
std::vector<int> fern_sink(const std::vector<int>& spine_children);

/// Psi_{i,j}^alpha(H) evaluated on a concrete fern with a designated sink.
Rat fern_sum_on(const CatalanTree& fern, const std::vector<int>& sink_code, int i, int j,
                const MultiIndex& alpha, const CoefficientTable& H);

/// Psi_{i,j}^alpha(H) on the canonical fern of height p; |alpha| = (d-1)p.
Rat fern_sum(int i, int j, const MultiIndex& alpha, const CoefficientTable& H, int p);

/// The explicit algebraic coefficient identity equivalent to (JH)^p = 0:
/// sum over compositions of beta into p parts of degree d-1 and over interior
/// type chains of the products of H coefficients, times the arity factors.
Rat nilpotency_identity_sum(const CoefficientTable& H, int p, int i, int j,
                            const MultiIndex& beta);

/// True iff the identity sum vanishes for every i, j and |beta| = (d-1)p.
bool nilpotency_identity_holds(const CoefficientTable& H, int p);

/// JH as an n x n matrix of polynomials, (JH)_{i,j} = d H_i / d X_j.
std::vector<std::vector<Polynomial>> jacobian_matrix(const CoefficientTable& H);

/// Direct symbolic check that (JH)^p = 0 via sparse polynomial matrix powers.
bool jacobian_power_is_zero(const CoefficientTable& H, int p);

/// Verdict of both independent routes (identity sums and symbolic powers);
/// throws std::logic_error if they ever disagree.
bool is_jacobian_nilpotent(const CoefficientTable& H, int p);

/// Per-class sums of average H-weights over the length-p shuffle classes of
/// C_k^(d); all sums vanish exactly when (JH)^p = 0.
struct ClassSumReport {
    int d = 0;
    long k = 0;
    int p = 0;
    int i = 0;
    MultiIndex alpha;
    std::vector<std::pair<std::string, Rat>> sums; // class key -> sum
    bool all_zero = true;
};

ClassSumReport shuffle_lemma_check(const CoefficientTable& H, int p, long k, int i,
                                   const MultiIndex& alpha, long cap = kDefaultTreeCap);

} // namespace catlab

#endif
