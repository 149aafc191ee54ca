#pragma once

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp; both produce
// bit-identical results because every reduction is done in a fixed order
// after the parallel part. The unqualified kernels:: entry points dispatch
// to the OpenMP version.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atmoead/core.hpp"

namespace atmoead::kernels {

// Distances below this are treated as coincident by the energy kernels.
inline constexpr double kCoincidenceEpsilon = 1e-12;

/// Pairwise energy contribution of one point, split into a count of
/// coincident partners (each worth 1/eps^s) and the finite remainder so that
/// adding and removing near-singular terms never loses the finite part.
struct EnergyTerm {
    std::size_t coincident = 0;
    double finite = 0.0;

    EnergyTerm& operator+=(EnergyTerm const& o);
    EnergyTerm& operator-=(EnergyTerm const& o);
    double value(double s) const;
};

bool operator<(EnergyTerm const& a, EnergyTerm const& b);

/// Riesz energy 1/d^s from a squared distance; coincident pairs are counted.
EnergyTerm pair_term(double squared_dist, double s);

namespace serial {
std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to);
std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points);
std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s);
std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed);
} // namespace serial

namespace omp {
std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to);
std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points);
std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s);
std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed);
} // namespace omp

/// For each point in `from`, the Euclidean distance to its nearest point in `to`.
std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to);

/// For each point, the distance to its nearest *other* member of the same set.
/// A singleton yields +inf.
std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points);

/// c_i = sum_{j != i} 1/|p_i - p_j|^s
std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s);

/// Number of uniform samples in the box [lower, ref] dominated by at least one
/// point. Samples are drawn in fixed blocks with per-block seeds, so the count
/// does not depend on the thread count.
std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed);

inline constexpr std::uint64_t kSampleBlock = 4096;

/// splitmix64 step; used for the per-block Monte Carlo streams.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace atmoead::kernels
