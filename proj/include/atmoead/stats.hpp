#pragma once

#include <cstddef>
#include <span>

namespace atmoead {

double mean(std::span<const double> values);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> values);

/// Exact enumeration is used when the smaller sample has fewer than this many values.
inline constexpr std::size_t kExactRankSumLimit = 10;
// Beyond this pooled size the exact table gets too large; the normal approximation is used.
inline constexpr std::size_t kExactPooledLimit = 200;

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) p-value. Exact null
/// distribution over midranks for small samples, otherwise the normal
/// approximation with tie and continuity corrections. Identical data gives 1.
double rank_sum_test(std::span<const double> a, std::span<const double> b);

} // namespace atmoead
