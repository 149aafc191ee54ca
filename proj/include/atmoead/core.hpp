#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atmoead {

using ObjectiveVector = std::vector<double>;
using DecisionVector = std::vector<double>;

// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A run or problem configuration that cannot be realized.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Solution {
    DecisionVector decision;
    ObjectiveVector objectives;
    std::int64_t eval_stamp = 0;
};

// Axis ranges narrower than this are treated as degenerate (denominator 1).
inline constexpr double kDegenerateAxisTolerance = 1e-12;

/// Pareto dominance for minimization. Throws UsageError on length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of the members dominated by no other member, in input order.
/// Objective-space duplicates are all retained.
std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points);

std::vector<Solution> nondominated_filter(std::span<const Solution> set);

/// Per-objective affine map p -> (p - lower) / (upper - lower).
struct ObjectiveBounds {
    std::vector<double> lower;
    std::vector<double> upper;

    /// Component-wise min/max over a non-empty point set.
    static ObjectiveBounds of(std::span<const ObjectiveVector> points);
    static ObjectiveBounds of(std::span<const Solution> solutions);

    double scale(std::size_t i) const;
    ObjectiveVector apply(std::span<const double> p) const;
    std::vector<ObjectiveVector> apply(std::span<const ObjectiveVector> points) const;
};

struct NormalizedSet {
    std::vector<ObjectiveVector> points;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Normalizes the population P and archive A with bounds taken from A only.
/// Population points may land outside [0,1]; they are not clipped.
std::pair<NormalizedSet, NormalizedSet> normalize(std::span<const Solution> population,
                                                  std::span<const Solution> archive);

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

std::vector<ObjectiveVector> objectives_of(std::span<const Solution> solutions);

/// Median; an even count averages the two central order statistics.
double median(std::vector<double> values);

std::string format_vector(std::span<const double> v);

} // namespace atmoead
