#ifndef CATLAB_SPAN_LAB_HPP
#define CATLAB_SPAN_LAB_HPP

#include "catlab/catalan.hpp"
#include "catlab/shuffle.hpp"
#include "catlab/tree.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace catlab {

/// 0/1 indicator matrix of the length-p shuffle classes: rows are trees in
/// enumeration order, columns are classes in sorted key order; column S has a
/// 1 exactly in the rows of its member trees.
struct IndicatorMatrix {
    int d = 0;
    long k = 0;
    int p = 0;
    std::vector<std::string> tree_encodings;
    std::vector<std::string> class_keys;
    std::vector<std::vector<int>> class_members; // per column, sorted row indices
};

IndicatorMatrix build_indicator_matrix(int degree, long k, int p, long cap = kDefaultTreeCap);

/// Exact decision whether the constant function 1 lies in the span of the
/// shuffle indicators, with a verifiable certificate either way: coefficients
/// lambda with sum_S lambda_S 1_S = 1 when it does, a rational functional
/// orthogonal to every column but not to 1 when it does not.
struct SpanCertificate {
    bool member = false;
    std::vector<std::pair<std::string, Rat>> lambda; // nonzero entries, key order
    std::vector<Rat> witness;                        // indexed like the trees
    std::vector<std::string> tree_encodings;
    long rank = 0;
    long columns = 0;
};

SpanCertificate span_membership(int degree, long k, int p, long cap = kDefaultTreeCap);

/// Exact rank of the indicator matrix and the ambient dimension C_k^(d).
struct SpanDimension {
    long rank = 0;
    Int ambient;
    long columns = 0;
};

SpanDimension span_dimension(int degree, long k, int p, long cap = kDefaultTreeCap);

/// The shuffle-span approximants of the constant function evaluated on one
/// tree: psi = N_{>=p}/(dk+1); the products J_m; the width-product function
/// phi = 1 - prod_m N_{<=m(p-1)}/(dk+1); and phi* which is exactly 1 on
/// p-perfect trees and phi elsewhere. The telescoping identity
/// phi = sum_m J_m/(dk+1)^m holds exactly.
struct WidthRecord {
    int p = 0;
    Rat psi;
    std::vector<Rat> j_values; // J_1, J_2, ... (nonzero prefix)
    bool j_constant_tail = false; // p == 1: J_m is the same for every m
    Rat phi;
    Rat phi_star;
    bool perfect = false;
};

WidthRecord width_functions(const CatalanTree& tree, int p);

enum class WidthWhich { Psi, Phi, PhiStar };

/// Exact norms ||f - 1||_1 (averaged over C_k^(d)) and ||f - 1||_inf by full
/// enumeration.
struct NormsRecord {
    Rat l1;
    Rat linf;
};

NormsRecord approximation_norms(int degree, long k, int p, WidthWhich which,
                                long cap = kDefaultTreeCap);

/// Sampled estimates for scales beyond the enumeration cap: the empirical
/// mean of |f-1| with a 99% Hoeffding radius, plus the sampled maximum.
/// Exact-rational accumulation keeps the result independent of worker count.
struct SampledNorms {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rat l1_estimate;
    double radius99 = 0.0;
    Rat linf_seen;
};

SampledNorms approximation_norms_sampled(int degree, long k, int p, WidthWhich which,
                                         std::uint64_t trials, std::uint64_t seed,
                                         int workers = 1);

/// Explicit coefficients realizing phi* in the span: per-(vertex-code, class)
/// contributions building each J_m/(dk+1)^m, plus singleton-class
/// coefficients of (1 - phi) on the p-perfect trees. The residual
/// sum_S lambda_S 1_S(T) - phi*(T) is reported per tree and is exactly zero.
struct PhiStarDecomposition {
    std::vector<std::pair<std::string, Rat>> lambda;
    std::vector<std::string> tree_encodings;
    std::vector<Rat> residual;
    bool residual_zero = true;
};

PhiStarDecomposition span_decomposition_of_phi_star(int degree, long k, int p,
                                                    long cap = kDefaultTreeCap);

} // namespace catlab

#endif
