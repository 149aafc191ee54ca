#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "atmoead/kernels.hpp"

using namespace atmoead;

namespace {

std::vector<ObjectiveVector> uniform_points(std::uint64_t seed, std::size_t n, std::size_t m)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& p : out) {
        for (auto& v : p) { v = u(gen); }
    }
    return out;
}

} // namespace

TEST(Kernels, NearestDistancesMatchBruteForce)
{
    auto const from = uniform_points(1, 300, 3);
    auto const to = uniform_points(2, 500, 3);
    auto const d = kernels::nearest_distances(from, to);
    for (std::size_t i = 0; i < from.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& q : to) { best = std::min(best, distance(from[i], q)); }
        EXPECT_DOUBLE_EQ(d[i], best);
    }
}

TEST(Kernels, NearestOtherExcludesSelf)
{
    std::vector<ObjectiveVector> pts{{0, 0}, {1, 0}, {3, 0}};
    auto const d = kernels::nearest_other_distances(pts);
    EXPECT_DOUBLE_EQ(d[0], 1.0);
    EXPECT_DOUBLE_EQ(d[1], 1.0);
    EXPECT_DOUBLE_EQ(d[2], 2.0);
    EXPECT_TRUE(std::isinf(kernels::nearest_other_distances(std::vector<ObjectiveVector>{{0, 0}})[0]));
}

TEST(Kernels, SerialAndOmpAgreeBitwise)
{
    auto const a = uniform_points(5, 700, 3);
    auto const b = uniform_points(6, 400, 3);
    EXPECT_EQ(kernels::serial::nearest_distances(a, b), kernels::omp::nearest_distances(a, b));
    EXPECT_EQ(kernels::serial::nearest_other_distances(a), kernels::omp::nearest_other_distances(a));

    auto const es = kernels::serial::energy_contributions(a, 6.0);
    auto const eo = kernels::omp::energy_contributions(a, 6.0);
    ASSERT_EQ(es.size(), eo.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        EXPECT_EQ(es[i].coincident, eo[i].coincident);
        EXPECT_EQ(es[i].finite, eo[i].finite);
    }

    std::vector<double> const lower{0, 0, 0};
    std::vector<double> const ref{1.1, 1.1, 1.1};
    EXPECT_EQ(kernels::serial::dominated_samples(b, lower, ref, 100000, 9),
              kernels::omp::dominated_samples(b, lower, ref, 100000, 9));
}

TEST(Kernels, EnergyContributionBruteForce)
{
    auto const pts = uniform_points(8, 40, 2);
    double const s = 4.0;
    auto const c = kernels::energy_contributions(pts, s);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i) { sum += 1.0 / std::pow(distance(pts[i], pts[j]), s); }
        }
        EXPECT_EQ(c[i].coincident, 0u);
        EXPECT_NEAR(c[i].finite, sum, 1e-9 * sum);
    }
}

TEST(Kernels, CoincidentPairsCounted)
{
    std::vector<ObjectiveVector> pts{{0, 0}, {0, 0}, {1, 0}};
    auto const c = kernels::energy_contributions(pts, 2.0);
    EXPECT_EQ(c[0].coincident, 1u);
    EXPECT_EQ(c[1].coincident, 1u);
    EXPECT_EQ(c[2].coincident, 0u);
    EXPECT_TRUE(c[2] < c[0]);
    EXPECT_DOUBLE_EQ(c[2].finite, 2.0);
}

TEST(Kernels, EnergyTermOrderingIsLexicographic)
{
    kernels::EnergyTerm a{0, 1e300};
    kernels::EnergyTerm b{1, 0.0};
    EXPECT_TRUE(a < b);
    a += b;
    EXPECT_EQ(a.coincident, 1u);
    a -= b;
    EXPECT_EQ(a.coincident, 0u);
}

TEST(Kernels, DominatedSamplesUnitBox)
{
    std::vector<ObjectiveVector> pts{{0, 0}};
    std::vector<double> const lower{0, 0};
    std::vector<double> const ref{1, 1};
    EXPECT_EQ(kernels::dominated_samples(pts, lower, ref, 10000, 1), 10000u);
}
