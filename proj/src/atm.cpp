#include "atmoead/atm.hpp"

namespace atmoead {

AtmState atm_initialize(EngineState& state, AtmParams params)
{
    if (!(params.s > 0.0)) { throw ConfigError("energy exponent must be positive"); }
    if (params.archive_capacity == 0) { throw ConfigError("archive capacity must be positive"); }
    AtmState atm{params, Archive{{}, params.archive_capacity}, StagnationTracker(params.fre, params.mode, params.tolerance), 0};
    atm.archive = archive_update(atm.archive, state.population(), params.s, state.rng);
    atm.tracker.reset(corresponding_weight_counts(state.incumbent_objectives()));
    return atm;
}

TriggerReport atm_step(EngineState& state, AtmState& atm, std::span<const Solution> offspring)
{
    TriggerReport report;
    report.generation = state.generation;
    atm.archive = archive_update(atm.archive, offspring, atm.params.s, state.rng);
    report.archive_size = atm.archive.members.size();

    report.stagnant = atm.tracker.update(corresponding_weight_counts(state.incumbent_objectives()));
    if (report.stagnant) {
        auto const consistency = consistency_detect(state.population(), atm.archive.members);
        report.consistency_evaluated = true;
        report.consistent = consistency.consistent;
        report.r = consistency.r;
        auto const frozen = static_cast<double>(state.eval_count) >=
                            atm.params.freeze_fraction * static_cast<double>(state.config.budget);
        if (!consistency.consistent && !frozen) {
            weight_adapt(state, atm.archive, consistency, atm.params.s);
            atm.tracker.reset(corresponding_weight_counts(state.incumbent_objectives()));
            report.adapted = true;
            ++atm.adaptations;
        }
    }
    report.population_size = state.subproblems.size();
    return report;
}

} // namespace atmoead
