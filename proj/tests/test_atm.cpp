#include <gtest/gtest.h>

#include "atmoead/atm.hpp"

using namespace atmoead;

namespace {

EngineState small_state(std::uint64_t seed = 1)
{
    EngineConfig c;
    c.problem = make_problem("DTLZ2", 2);
    c.population = 20;
    c.budget = 2000;
    c.variation = VariationParams::for_dimension(c.problem->variables());
    c.seed = seed;
    return initialize(c);
}

AtmParams params_with(std::size_t fre)
{
    AtmParams p;
    p.fre = fre;
    p.s = 4.0;
    p.archive_capacity = 40;
    return p;
}

// Incumbents on the first half of the line f1 + f2 = 1, archive on all of it.
void half_covered(EngineState& state, AtmState& atm)
{
    auto const n = state.subproblems.size();
    for (std::size_t i = 0; i < n; ++i) {
        double const t = 0.5 * static_cast<double>(i) / static_cast<double>(n - 1);
        state.subproblems[i].incumbent.objectives = {t, 1.0 - t};
    }
    state.ideal = {0.0, 0.0};
    atm.archive.members.clear();
    for (std::size_t k = 0; k < atm.archive.capacity; ++k) {
        double const t = static_cast<double>(k) / static_cast<double>(atm.archive.capacity - 1);
        atm.archive.members.push_back(Solution{{}, {t, 1.0 - t}, 0});
    }
    atm.tracker.reset(corresponding_weight_counts(state.incumbent_objectives()));
}

} // namespace

TEST(AtmStep, NonStagnantSkipsConsistency)
{
    auto state = small_state();
    auto atm = atm_initialize(state, params_with(3));
    auto const offspring = run_generation(state);
    auto const report = atm_step(state, atm, offspring);
    EXPECT_FALSE(report.stagnant);
    EXPECT_FALSE(report.consistency_evaluated);
    EXPECT_FALSE(report.consistent);
    EXPECT_FALSE(report.adapted);
}

TEST(AtmStep, FrozenStateFiresAtFre)
{
    auto state = small_state();
    auto atm = atm_initialize(state, params_with(3));
    std::vector<TriggerReport> reports;
    for (int g = 0; g < 5; ++g) {
        ++state.generation;
        reports.push_back(atm_step(state, atm, {}));
    }
    EXPECT_FALSE(reports[0].stagnant);
    EXPECT_FALSE(reports[1].stagnant);
    EXPECT_TRUE(reports[2].stagnant);
    // Archive came from this population, so it is consistent and nothing resets.
    EXPECT_TRUE(reports[2].consistent);
    EXPECT_FALSE(reports[2].adapted);
    EXPECT_TRUE(reports[3].stagnant);
    EXPECT_EQ(atm.tracker.count(), 3u);
}

TEST(AtmStep, StagnantAndInconsistentAdapts)
{
    auto state = small_state();
    auto atm = atm_initialize(state, params_with(1));
    half_covered(state, atm);
    auto const report = atm_step(state, atm, {});
    ASSERT_TRUE(report.stagnant);
    EXPECT_FALSE(report.consistent);
    EXPECT_TRUE(report.adapted);
    EXPECT_EQ(atm.adaptations, 1u);
    EXPECT_EQ(report.population_size, 20u);
    EXPECT_EQ(atm.tracker.count(), 0u);
}

TEST(AtmStep, FreezeWindowBlocksAdaptation)
{
    auto state = small_state();
    auto atm = atm_initialize(state, params_with(1));
    half_covered(state, atm);
    state.eval_count = 1900;
    auto const report = atm_step(state, atm, {});
    ASSERT_TRUE(report.stagnant);
    EXPECT_FALSE(report.consistent);
    EXPECT_FALSE(report.adapted);
    EXPECT_EQ(atm.adaptations, 0u);
}

TEST(AtmInitialize, BadParamsRejected)
{
    auto state = small_state();
    auto p = params_with(1);
    p.s = 0.0;
    EXPECT_THROW(atm_initialize(state, p), ConfigError);
    p = params_with(1);
    p.archive_capacity = 0;
    EXPECT_THROW(atm_initialize(state, p), ConfigError);
}
