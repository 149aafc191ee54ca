#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "atmoead/atm.hpp"

using namespace atmoead;

namespace {

std::vector<Solution> as_solutions(std::vector<ObjectiveVector> const& pts)
{
    std::vector<Solution> out;
    for (auto const& p : pts) { out.push_back(Solution{{}, p, 0}); }
    return out;
}

// Hand-built state: each weight holds the given incumbent, ideal at the origin.
EngineState hand_state(std::vector<WeightVector> const& weights, std::vector<ObjectiveVector> const& incumbents,
                       Scalarization kind)
{
    EngineState s;
    s.config.problem = make_problem("DTLZ2", 2);
    s.config.population = weights.size();
    s.config.budget = 1000;
    s.config.scalarization = kind;
    s.neighborhood = 2;
    s.ideal = {0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        Subproblem sp;
        sp.weight = weights[i];
        sp.incumbent = Solution{{}, incumbents[i], 0};
        s.subproblems.push_back(sp);
    }
    recompute_neighborhoods(s);
    return s;
}

Archive archive_of(std::vector<ObjectiveVector> const& pts) { return {as_solutions(pts), 2 * pts.size()}; }

} // namespace

TEST(WeightAdapt, TchebycheffWeightFromNormalizedPoint)
{
    auto state = hand_state({{1, 0}, {0.5, 0.5}, {0, 1}}, {{1, 0}, {1, 0}, {1, 0}}, Scalarization::tchebycheff);
    auto const archive = archive_of({{0, 1}, {0.25, 0.75}, {1, 0}});
    auto const c = consistency_detect(state.population(), archive.members);
    ASSERT_FALSE(c.consistent);

    auto const summary = weight_adapt(state, archive, c, 4.0);
    EXPECT_EQ(summary.added, 2u);
    EXPECT_EQ(summary.removed_redundant, 2u);
    EXPECT_EQ(summary.removed_by_energy, 0u);
    ASSERT_EQ(state.subproblems.size(), 3u);

    auto const it = std::find_if(state.subproblems.begin(), state.subproblems.end(), [](Subproblem const& sp) {
        return sp.incumbent.objectives == ObjectiveVector{0.25, 0.75};
    });
    ASSERT_NE(it, state.subproblems.end());
    EXPECT_NEAR(it->weight[0], 0.75, 1e-12);
    EXPECT_NEAR(it->weight[1], 0.25, 1e-12);

    // One weight per solution afterwards.
    auto const counts = corresponding_weight_counts(state.incumbent_objectives()).counts;
    EXPECT_TRUE(std::all_of(counts.begin(), counts.end(), [](std::size_t n) { return n == 1; }));
    for (auto const& sp : state.subproblems) {
        EXPECT_EQ(sp.neighbors.size(), 2u);
        EXPECT_NEAR(std::accumulate(sp.weight.begin(), sp.weight.end(), 0.0), 1.0, 1e-12);
    }
}

TEST(WeightAdapt, InverseWeightPointsAlongMember)
{
    auto state = hand_state({{1, 0}, {0.5, 0.5}, {0, 1}}, {{1, 0}, {1, 0}, {1, 0}}, Scalarization::inverse_tchebycheff);
    state.ideal = {0.0, 0.5};
    auto const archive = archive_of({{0, 2}, {0.25, 1.25}, {1, 0.5}});
    auto const c = consistency_detect(state.population(), archive.members);
    weight_adapt(state, archive, c, 4.0);
    auto const it = std::find_if(state.subproblems.begin(), state.subproblems.end(), [](Subproblem const& sp) {
        return sp.incumbent.objectives == ObjectiveVector{0.25, 1.25};
    });
    ASSERT_NE(it, state.subproblems.end());
    // a - z = (0.25, 0.75)
    EXPECT_NEAR(it->weight[0], 0.25, 1e-12);
    EXPECT_NEAR(it->weight[1], 0.75, 1e-12);
}

TEST(WeightAdapt, NothingFarMeansNothingAdded)
{
    std::vector<ObjectiveVector> const inc{{0, 1}, {0.5, 0.5}, {1, 0}, {0.5, 0.5}};
    auto state = hand_state({{1, 0}, {0.6, 0.4}, {0, 1}, {0.4, 0.6}}, inc, Scalarization::tchebycheff);
    auto const archive = archive_of({{0, 1}, {0.5, 0.5}, {1, 0}});
    auto const c = consistency_detect(state.population(), archive.members);
    auto const summary = weight_adapt(state, archive, c, 4.0);
    EXPECT_EQ(summary.added, 0u);
    EXPECT_EQ(summary.removed_redundant, 0u);
    EXPECT_EQ(state.subproblems.size(), 4u);
}

TEST(WeightAdapt, RedundantHolderWithWorseValueGoes)
{
    // Weights 1 and 2 share (0.5, 0.5); weight 2 scores it worse and is dropped.
    auto state = hand_state({{1, 0}, {0.5, 0.5}, {0.1, 0.9}, {0, 1}}, {{1, 0}, {0.5, 0.5}, {0.5, 0.5}, {0, 1}},
                            Scalarization::tchebycheff);
    // Dense pairs keep r small so only (0.25, 0.75) counts as far.
    auto const archive = archive_of({{1, 0}, {0.98, 0.02}, {0.5, 0.5}, {0.48, 0.52}, {0.25, 0.75}, {0, 1}, {0.02, 0.98}});
    auto const c = consistency_detect(state.population(), archive.members);
    auto const summary = weight_adapt(state, archive, c, 4.0);
    ASSERT_EQ(summary.added, 1u);
    EXPECT_EQ(summary.removed_redundant, 1u);
    ASSERT_EQ(state.subproblems.size(), 4u);
    auto const w = state.weights();
    EXPECT_NE(std::find(w.begin(), w.end(), WeightVector{0.5, 0.5}), w.end());
    EXPECT_EQ(std::find(w.begin(), w.end(), WeightVector{0.1, 0.9}), w.end());
}

TEST(WeightAdapt, EnergyTrimRestoresPopulationSize)
{
    std::vector<WeightVector> weights;
    std::vector<ObjectiveVector> inc;
    for (int k = 0; k < 6; ++k) {
        double const t = k / 10.0;
        weights.push_back({1 - t, t});
        inc.push_back({1 - t, t});
    }
    auto state = hand_state(weights, inc, Scalarization::tchebycheff);
    std::vector<ObjectiveVector> arc;
    for (int k = 0; k <= 10; ++k) { arc.push_back({1 - k / 10.0, k / 10.0}); }
    auto const archive = archive_of(arc);
    auto const c = consistency_detect(state.population(), archive.members);
    auto const summary = weight_adapt(state, archive, c, 4.0);
    EXPECT_GT(summary.added, 0u);
    EXPECT_EQ(state.subproblems.size(), 6u);
    EXPECT_EQ(summary.added, summary.removed_redundant + summary.removed_by_energy);
    // The trimmed set reaches the far end of the line.
    auto const pop = state.incumbent_objectives();
    EXPECT_NE(std::find(pop.begin(), pop.end(), ObjectiveVector{0, 1}), pop.end());
}
