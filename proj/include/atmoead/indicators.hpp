#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "atmoead/core.hpp"
#include "atmoead/problems.hpp"

namespace atmoead {

/// Mean over reference points of the distance to the nearest member of S.
/// Throws UsageError when S or R is empty.
double igd(std::span<const ObjectiveVector> solutions, std::span<const ObjectiveVector> reference);

/// IGD against the problem's reference front; scaled problems are scored
/// after mapping both sets by the analytic front extent.
double igd(std::span<const ObjectiveVector> solutions, Problem const& problem, ReferenceFront const& reference);

/// (v - min) / (max - min) per objective with the analytic front extremes.
std::vector<ObjectiveVector> front_normalize(std::span<const ObjectiveVector> points, Problem const& problem);

inline constexpr std::uint64_t kHvSeed = 0x5eed0f4f3ULL;
inline constexpr std::uint64_t kHvSamples = 1'000'000;
inline constexpr std::size_t kExactHvMaxObjectives = 4;

struct HvResult {
    double value = 0.0;
    bool exact = true;
    std::uint64_t samples = 0;
    double std_error = 0.0;
};

/// Exact dominated volume by recursive slicing over the last objective.
/// Points not strictly better than ref on every objective are ignored.
double hv_exact(std::span<const ObjectiveVector> points, std::span<const double> ref);

/// Monte Carlo estimate in the box spanned by the surviving points' minimum and ref.
HvResult hv_monte_carlo(std::span<const ObjectiveVector> points, std::span<const double> ref,
                        std::uint64_t samples = kHvSamples, std::uint64_t seed = kHvSeed);

/// Exact for M <= 4, Monte Carlo beyond.
HvResult hv(std::span<const ObjectiveVector> points, std::span<const double> ref);

} // namespace atmoead
