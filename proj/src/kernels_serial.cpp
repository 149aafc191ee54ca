#include "kernels_detail.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

namespace atmoead::kernels {

EnergyTerm& EnergyTerm::operator+=(EnergyTerm const& o)
{
    coincident += o.coincident;
    finite += o.finite;
    return *this;
}

EnergyTerm& EnergyTerm::operator-=(EnergyTerm const& o)
{
    coincident -= o.coincident;
    finite -= o.finite;
    return *this;
}

double EnergyTerm::value(double s) const
{
    return finite + static_cast<double>(coincident) / std::pow(kCoincidenceEpsilon, s);
}

bool operator<(EnergyTerm const& a, EnergyTerm const& b)
{
    if (a.coincident != b.coincident) { return a.coincident < b.coincident; }
    return a.finite < b.finite;
}

EnergyTerm pair_term(double squared_dist, double s)
{
    if (squared_dist < kCoincidenceEpsilon * kCoincidenceEpsilon) { return {1, 0.0}; }
    double const half = 0.5 * s;
    double denom = 0.0;
    if (half == std::floor(half) && half <= 64.0) {
        denom = 1.0;
        for (int k = 0; k < static_cast<int>(half); ++k) { denom *= squared_dist; }
    } else {
        denom = std::pow(squared_dist, half);
    }
    return {0, 1.0 / denom};
}

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace detail {

double nearest(ObjectiveVector const& p, std::span<const ObjectiveVector> to, std::size_t skip)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < to.size(); ++j) {
        if (j == skip) { continue; }
        double const d2 = squared_distance(p, to[j]);
        if (d2 < best) { best = d2; }
    }
    return std::sqrt(best);
}

EnergyTerm contribution(std::span<const ObjectiveVector> points, std::size_t i, double s)
{
    EnergyTerm c;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (j != i) { c += pair_term(squared_distance(points[i], points[j]), s); }
    }
    return c;
}

std::uint64_t dominated_in_block(std::span<const ObjectiveVector> points,
                                 std::span<const double> lower, std::span<const double> ref,
                                 std::uint64_t count, std::uint64_t seed, std::uint64_t block)
{
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (block + 1));
    std::size_t const m = ref.size();
    std::vector<double> x(m);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            double const u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
            x[i] = lower[i] + u * (ref[i] - lower[i]);
        }
        for (auto const& p : points) {
            bool covers = true;
            for (std::size_t i = 0; i < m && covers; ++i) { covers = p[i] <= x[i]; }
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    return hits;
}

} // namespace detail

namespace serial {

std::vector<double> nearest_distances(std::span<const ObjectiveVector> from,
                                      std::span<const ObjectiveVector> to)
{
    std::vector<double> out(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        out[i] = detail::nearest(from[i], to, to.size());
    }
    return out;
}

std::vector<double> nearest_other_distances(std::span<const ObjectiveVector> points)
{
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) { out[i] = detail::nearest(points[i], points, i); }
    return out;
}

std::vector<EnergyTerm> energy_contributions(std::span<const ObjectiveVector> points, double s)
{
    std::vector<EnergyTerm> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) { out[i] = detail::contribution(points, i, s); }
    return out;
}

std::uint64_t dominated_samples(std::span<const ObjectiveVector> points,
                                std::span<const double> lower, std::span<const double> ref,
                                std::uint64_t samples, std::uint64_t seed)
{
    std::uint64_t const blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    std::uint64_t hits = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t const count = std::min(kSampleBlock, samples - b * kSampleBlock);
        hits += detail::dominated_in_block(points, lower, ref, count, seed, b);
    }
    return hits;
}

} // namespace serial

} // namespace atmoead::kernels
