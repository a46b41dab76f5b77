#ifndef CATLAB_STATS_HPP
#define CATLAB_STATS_HPP

#include "catlab/rational.hpp"

#include <cstdint>
#include <vector>

namespace catlab {

/// Upper quantile of the chi-square distribution by the Wilson-Hilferty cube
/// approximation; accurate to a few tenths of a percent for df >= 5, which is
/// all a fixed accept/reject threshold needs.
double chi2_quantile(int df, double prob);

/// Pearson statistic against a uniform distribution over `cells` categories.
double chi2_uniform_statistic(const std::vector<std::uint64_t>& observed,
                              std::uint64_t trials);

/// z_{0.999} etc. for binomial margins.
inline constexpr double kZ999 = 3.090232306167814;

} // namespace catlab

#endif
