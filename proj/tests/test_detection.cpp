#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "atmoead/atm.hpp"

using namespace atmoead;

namespace {

std::vector<Solution> as_solutions(std::vector<ObjectiveVector> const& pts)
{
    std::vector<Solution> out;
    for (auto const& p : pts) { out.push_back(Solution{{}, p, 0}); }
    return out;
}

CorrespondenceTable table_of(std::vector<ObjectiveVector> const& incumbents)
{
    return corresponding_weight_counts(incumbents);
}

std::vector<ObjectiveVector> const kIncumbents{{0, 1}, {0.3, 0.7}, {0.6, 0.4}, {1, 0}};

} // namespace

TEST(StagnationTracker, FiresOnThirdUnchangedGeneration)
{
    StagnationTracker t(3);
    EXPECT_FALSE(t.primed());
    EXPECT_FALSE(t.update(table_of(kIncumbents)));
    EXPECT_TRUE(t.primed());
    EXPECT_FALSE(t.update(table_of(kIncumbents)));
    EXPECT_FALSE(t.update(table_of(kIncumbents)));
    EXPECT_TRUE(t.update(table_of(kIncumbents)));
    EXPECT_EQ(t.count(), 3u);
    EXPECT_TRUE(t.update(table_of(kIncumbents)));
    EXPECT_EQ(t.count(), 3u);
}

TEST(StagnationTracker, FirstGenerationNeverStagnant)
{
    StagnationTracker t(1);
    EXPECT_FALSE(t.update(table_of(kIncumbents)));
    EXPECT_TRUE(t.update(table_of(kIncumbents)));
}

TEST(StagnationTracker, SingleChangeResets)
{
    for (std::size_t w = 0; w < kIncumbents.size(); ++w) {
        StagnationTracker t(2);
        t.reset(table_of(kIncumbents));
        t.update(table_of(kIncumbents));
        EXPECT_EQ(t.count(), 1u);
        auto changed = kIncumbents;
        changed[w][0] += 1e-12;
        EXPECT_FALSE(t.update(table_of(changed)));
        EXPECT_EQ(t.count(), 0u);
    }
}

TEST(StagnationTracker, CountsModeIgnoresMovesThatKeepSharing)
{
    StagnationTracker t(1, StagnationMode::counts);
    t.reset(table_of(kIncumbents));
    auto moved = kIncumbents;
    moved[1] = {0.31, 0.69};
    EXPECT_TRUE(t.update(table_of(moved)));
    auto shared = moved;
    shared[2] = shared[1];
    EXPECT_FALSE(t.update(table_of(shared)));
}

TEST(StagnationTracker, ToleranceModeUsesNormalizedMoves)
{
    StagnationTracker t(1, StagnationMode::tolerance, 0.01);
    t.reset(table_of(kIncumbents));
    auto small = kIncumbents;
    small[1] = {0.305, 0.7};
    EXPECT_TRUE(t.update(table_of(small)));
    auto large = small;
    large[1] = {0.33, 0.7};
    EXPECT_FALSE(t.update(table_of(large)));
    EXPECT_EQ(t.count(), 0u);

    // Moves are measured relative to the population extent.
    StagnationTracker scaled(1, StagnationMode::tolerance, 0.01);
    auto wide = kIncumbents;
    for (auto& p : wide) { p[0] *= 100.0; }
    scaled.reset(table_of(wide));
    auto wide_moved = wide;
    wide_moved[1][0] += 0.5;
    EXPECT_TRUE(scaled.update(table_of(wide_moved)));
}

TEST(StagnationTracker, ZeroThresholdRejected)
{
    EXPECT_THROW(StagnationTracker(0), ConfigError);
}

TEST(Consistency, IdenticalSetsAreConsistent)
{
    auto const a = as_solutions(kIncumbents);
    auto const c = consistency_detect(a, a);
    EXPECT_TRUE(c.consistent);
    for (double d : c.to_population) { EXPECT_EQ(d, 0.0); }
}

TEST(Consistency, HandComputedExample)
{
    auto const c = consistency_detect(as_solutions({{0, 1}, {1, 0}}), as_solutions({{0, 1}, {0.5, 0.5}, {1, 0}}));
    EXPECT_NEAR(c.r, 1.0, 1e-12);
    for (double d : c.to_archive) { EXPECT_NEAR(d, std::sqrt(0.5), 1e-12); }
    EXPECT_NEAR(c.to_population[1], std::sqrt(0.5), 1e-12);
    EXPECT_TRUE(c.consistent);
}

TEST(Consistency, FarArchivePointIsInconsistent)
{
    std::vector<ObjectiveVector> archive;
    for (int k = 0; k <= 10; ++k) { archive.push_back({k / 10.0, 1.0 - k / 10.0}); }
    std::vector<ObjectiveVector> pop(archive.begin(), archive.begin() + 6);
    auto const c = consistency_detect(as_solutions(pop), as_solutions(archive));
    EXPECT_FALSE(c.consistent);
    EXPECT_NEAR(c.r, std::sqrt(2.0) * std::sqrt(0.02), 1e-12);
}

TEST(Consistency, SmallArchiveIsConsistent)
{
    EXPECT_TRUE(consistency_detect(as_solutions({{5, 5}}), as_solutions({{0, 1}})).consistent);
}

TEST(Consistency, InvariantUnderCommonScaling)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ObjectiveVector> archive(12, ObjectiveVector(3));
        std::vector<ObjectiveVector> pop(8, ObjectiveVector(3));
        for (auto& p : archive) {
            for (auto& v : p) { v = u(gen); }
        }
        for (auto& p : pop) {
            for (auto& v : p) { v = u(gen); }
        }
        double const scale = std::exp(6.0 * u(gen) - 3.0);
        auto sa = archive;
        auto sp = pop;
        for (auto& p : sa) {
            for (auto& v : p) { v *= scale; }
        }
        for (auto& p : sp) {
            for (auto& v : p) { v *= scale; }
        }
        auto const base = consistency_detect(as_solutions(pop), as_solutions(archive));
        auto const scaled = consistency_detect(as_solutions(sp), as_solutions(sa));
        EXPECT_EQ(base.consistent, scaled.consistent);
        EXPECT_NEAR(base.r, scaled.r, 1e-9);
    }
}
