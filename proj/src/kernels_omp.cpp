#include "kernels_detail.hpp"

#include <algorithm>

namespace atmoead::kernels {

namespace omp {

std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to)
{
    std::vector<double> out(from.size());
    auto const n = static_cast<std::ptrdiff_t>(from.size());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(to.size()) > 20000)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = detail::nearest(from[i], to, to.size());
    }
    return out;
}

std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points)
{
    std::vector<double> out(points.size());
    auto const n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (n * n > 20000)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = detail::nearest(points[i], points, static_cast<std::size_t>(i));
    }
    return out;
}

std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s)
{
    std::vector<EnergyTerm> out(points.size());
    auto const n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (n * n > 20000)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = detail::contribution(points, static_cast<std::size_t>(i), s);
    }
    return out;
}

std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed)
{
    auto const blocks = static_cast<std::ptrdiff_t>((samples + kSampleBlock - 1) / kSampleBlock);
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(blocks), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
        auto const ub = static_cast<std::uint64_t>(b);
        std::uint64_t const count = std::min(kSampleBlock, samples - ub * kSampleBlock);
        hits[static_cast<std::size_t>(b)] = detail::dominated_in_block(points, lower, ref, count, seed, ub);
    }
    std::uint64_t total = 0;
    for (auto h : hits) { total += h; }
    return total;
}

} // namespace omp

std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to)
{
    return omp::nearest_distances(from, to);
}

std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points)
{
    return omp::nearest_other_distances(points);
}

std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s)
{
    return omp::energy_contributions(points, s);
}

std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed)
{
    return omp::dominated_samples(points, lower, ref, samples, seed);
}

} // namespace atmoead::kernels
