#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "atmoead/core.hpp"

namespace atmoead {

// A point on the unit simplex defining one Tchebycheff subproblem.
using WeightVector = std::vector<double>;

struct WeightSet {
    std::vector<WeightVector> vectors;
    // neighborhoods[i] lists the T nearest weights to i (self first), by
    // Euclidean distance ascending, ties by index.
    std::vector<std::vector<std::size_t>> neighborhoods;
};

// Zero weight components are floored to this in the scalarizing function.
inline constexpr double kWeightFloor = 1e-6;

/// Das-Dennis lattice: every vector with components in {0, 1/H, ..., 1}
/// summing to 1, in lexicographic order. C(H+M-1, M-1) vectors.
std::vector<WeightVector> simplex_lattice(std::size_t m, std::size_t h);

/// Outer lattice H1 plus an inner lattice H2 shrunk toward the centroid by
/// w/2 + 1/(2M). H2 = 0 means no inner layer. Duplicates are dropped.
std::vector<WeightVector> two_layer_lattice(std::size_t m, std::size_t h1, std::size_t h2);

std::size_t binomial(std::size_t n, std::size_t k);

/// 10% of the population, at least 2.
std::size_t neighborhood_size(std::size_t population);

std::vector<std::vector<std::size_t>> nearest_neighborhoods(std::span<const WeightVector> weights,
                                                            std::size_t t);

/// Exactly N weights for an M-objective run: one lattice for M <= 3, two
/// layers beyond, trimmed to N by energy-based subset selection that always
/// keeps the M unit vectors. Throws ConfigError if N < M.
WeightSet weights_for_population(std::size_t m, std::size_t n);

/// max_i max(w_i, 1e-6) * |f_i - z_i|
double tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z);

/// max_i |f_i - z_i| / max(w_i, 1e-6). Its optimum on a front lies on the
/// ray from z along w, so a uniform lattice gives a uniform front sample.
double inverse_tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z);

enum class Scalarization { tchebycheff, inverse_tchebycheff };

double scalarize(Scalarization kind, std::span<const double> f, std::span<const double> w, std::span<const double> z);

/// Weight whose optimum is `point` (relative to the origin) under `kind`.
WeightVector weight_for(Scalarization kind, std::span<const double> point);

/// Weight along `point`: w_i proportional to max(point_i, 0) (uniform if all vanish).
WeightVector weight_along(std::span<const double> point);

/// Weight for which `point` is the Tchebycheff optimum relative to the
/// origin: w_i proportional to 1 / max(point_i, 1e-6).
WeightVector weight_through(std::span<const double> point);

/// Which weights share an incumbent. Two incumbents are the same solution iff
/// their objective vectors are bit-identical.
struct CorrespondenceTable {
    std::vector<ObjectiveVector> incumbents; // indexed by weight
    std::vector<std::size_t> solution_id;    // distinct-solution id per weight
    std::vector<std::size_t> counts;         // weights sharing that weight's incumbent

    /// True when every weight's incumbent is unchanged.
    bool same_assignment(CorrespondenceTable const& other) const;
};

CorrespondenceTable corresponding_weight_counts(std::span<const ObjectiveVector> incumbents);

} // namespace atmoead
