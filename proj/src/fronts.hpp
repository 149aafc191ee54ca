#pragma once

// Building blocks for analytic Pareto-front samplers.

#include <cstddef>
#include <functional>
#include <vector>

#include "atmoead/core.hpp"

namespace atmoead::fronts {

using Curve = std::function<ObjectiveVector(double)>;

/// Simplex-lattice points (sum 1) with the smallest H reaching n points.
std::vector<ObjectiveVector> simplex_points(std::size_t m, std::size_t n);

/// Lattice directions projected onto the positive unit sphere.
std::vector<ObjectiveVector> sphere_points(std::size_t m, std::size_t n);

/// Samples a parametric curve t in [t0, t1] uniformly by arc length. With
/// `filter` (two objectives only) the non-dominated parts are found on a dense
/// grid first and points are spread over the segments in proportion to their
/// length. Points are re-evaluated at the interpolated parameter so they lie
/// exactly on the curve.
std::vector<ObjectiveVector> sample_curve(Curve const& curve, double t0, double t1, std::size_t n,
                                          bool filter);

/// Maximal intervals of [0,1] on which phi sets a new strict running maximum.
struct Interval {
    double lo;
    double hi;
};
std::vector<Interval> record_intervals(std::function<double(double)> const& phi, std::size_t grid);

/// Evenly spaced values covering the union of intervals, in proportion to length.
std::vector<double> spread_over(std::vector<Interval> const& intervals, std::size_t count);

} // namespace atmoead::fronts
