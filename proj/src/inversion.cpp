#include "catlab/inversion.hpp"

#include "catlab/parallel.hpp"
#include "catlab/weights.hpp"

#include <cmath>

namespace catlab {

namespace {

long internal_count_for(const CoefficientTable& H, const MultiIndex& alpha) {
    if (static_cast<int>(alpha.size()) != H.n)
        throw InvalidParameterError("multi-index length must equal n");
    unsigned long w = alpha.weight();
    if (w == 0) throw InvalidDegreeError("|alpha| must be >= 1");
    if ((w - 1) % (H.d - 1) != 0)
        throw InvalidDegreeError("|alpha| - 1 must be a multiple of d - 1");
    return static_cast<long>((w - 1) / (H.d - 1));
}

} // namespace

Rat inverse_coefficient(const CoefficientTable& H, int i, const MultiIndex& alpha, long cap) {
    if (i < 0 || i >= H.n) throw InvalidParameterError("component index out of range");
    const long k = internal_count_for(H, alpha);
    require_within_cap(H.d, k, cap);

    Rat sum = 0;
    for_each_tree_encoding(H.d, k, [&](const std::string& enc) {
        std::vector<std::uint8_t> kinds(enc.size());
        for (std::size_t t = 0; t < enc.size(); ++t) kinds[t] = enc[t] == '1';
        CatalanTree tree = CatalanTree::from_kinds(H.d, std::move(kinds));
        sum += average_h_weight(tree, i, alpha, H);
    });
    if (sum == 0) return sum;
    Rat scale(Int(1), int_pow(factorial(static_cast<unsigned long>(H.d)),
                              static_cast<unsigned long>(k)));
    scale.canonicalize();
    return sum * scale;
}

BoundReport coefficient_bound_report(const CoefficientTable& H, int i, const MultiIndex& alpha,
                                     std::optional<Rat> span_deficit, long cap) {
    BoundReport report;
    report.k = internal_count_for(H, alpha);
    report.g = inverse_coefficient(H, i, alpha, cap);
    report.g_abs = rat_abs(report.g);
    report.l_value = H.max_abs();

    const unsigned long k = static_cast<unsigned long>(report.k);
    Rat bound(catalan_number(H.d, report.k) * int_pow(Int(H.n), k >= 1 ? k - 1 : 0) *
                  (factorial(alpha.weight()) / alpha.fact()),
              int_pow(factorial(static_cast<unsigned long>(H.d)), k));
    bound.canonicalize();
    bound *= rat_pow(report.l_value, k);
    report.bound = bound;
    report.holds = report.g_abs <= report.bound;
    if (span_deficit) {
        report.deficit = *span_deficit;
        report.refined_bound = bound * (*span_deficit);
        report.refined_holds = report.g_abs <= *report.refined_bound;
    }
    return report;
}

GwLeafLawReport verify_gw_leaf_law(const OffspringDistribution& offspring, int root_type,
                                   const MultiIndex& alpha, std::uint64_t trials,
                                   std::uint64_t seed, long vertex_cap, int workers) {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    if (root_type < 0 || root_type >= offspring.n)
        throw InvalidParameterError("root type out of range");
    if (static_cast<int>(alpha.size()) != offspring.n)
        throw InvalidParameterError("multi-index length must equal n");
    if (!offspring.strictly_substochastic())
        throw InvalidParameterError(
            "leaf-law comparison needs every leaf mass d_i > 0 (strictly substochastic rows)");

    GwLeafLawReport report;
    report.root_type = root_type;
    report.alpha = alpha;
    report.trials = trials;
    report.seed = seed;
    report.vertex_cap = vertex_cap;

    // Exact side: g from the inverse of F_i = X_i - sum h_{i,beta} X^beta.
    std::vector<std::map<MultiIndex, Rat>> h = offspring.rows;
    TruncatedSeriesMap f = TruncatedSeriesMap::from_undivided(offspring.n, h, alpha.weight());
    TruncatedSeriesMap g = truncated_inverse(f, alpha.weight());
    report.exact = offspring.leaf_mass_power(alpha) * g.coeff(root_type, alpha);

    // Empirical side; cap-exceeded draws count as infinite, i.e. misses.
    std::uint64_t packed = sum_trials(trials, workers, [&](std::uint64_t t) -> std::uint64_t {
        Rng rng = Rng::stream(seed, t);
        GwSample sample = sample_gw_multitype(offspring, root_type, rng, vertex_cap);
        if (sample.cap_exceeded) return std::uint64_t(1) << 32;
        return sample.tree.leaftype(offspring.n) == alpha ? 1 : 0;
    });
    report.hits = packed & 0xFFFFFFFFull;
    report.cap_exceeded = packed >> 32;
    report.empirical = Rat(Int(report.hits), Int(trials));
    report.empirical.canonicalize();

    double exact = report.exact.get_d();
    double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    double diff = report.empirical.get_d() - exact;
    if (sigma > 0)
        report.z_score = diff / sigma;
    else
        report.z_score = diff == 0 ? 0.0 : (diff > 0 ? 1e300 : -1e300);
    return report;
}

} // namespace catlab
