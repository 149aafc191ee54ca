#include "atmoead/moead.hpp"

#include <algorithm>
#include <limits>

namespace atmoead {

std::vector<WeightVector> EngineState::weights() const
{
    std::vector<WeightVector> out;
    out.reserve(subproblems.size());
    for (auto const& sp : subproblems) { out.push_back(sp.weight); }
    return out;
}

std::vector<ObjectiveVector> EngineState::incumbent_objectives() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(subproblems.size());
    for (auto const& sp : subproblems) { out.push_back(sp.incumbent.objectives); }
    return out;
}

std::vector<Solution> EngineState::population() const
{
    std::vector<Solution> out;
    out.reserve(subproblems.size());
    for (auto const& sp : subproblems) { out.push_back(sp.incumbent); }
    return out;
}

EngineState initialize(EngineConfig config)
{
    if (!config.problem) { throw ConfigError("engine: no problem"); }
    if (config.budget < static_cast<std::int64_t>(config.population)) {
        throw ConfigError("engine: budget smaller than the population");
    }
    config.variation.validate();
    auto const& spec = config.problem->spec();
    auto weights = weights_for_population(spec.objectives, config.population);

    EngineState state;
    state.rng = RandomSource(config.seed);
    state.neighborhood = config.neighborhood ? config.neighborhood : neighborhood_size(config.population);
    if (state.neighborhood < 2 || state.neighborhood > config.population) {
        throw ConfigError("engine: neighborhood size must lie in [2, N]");
    }
    if (state.neighborhood != weights.neighborhoods.front().size()) {
        weights.neighborhoods = nearest_neighborhoods(weights.vectors, state.neighborhood);
    }
    state.subproblems.resize(config.population);
    state.ideal.assign(spec.objectives, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < config.population; ++i) {
        auto& sp = state.subproblems[i];
        sp.weight = std::move(weights.vectors[i]);
        sp.neighbors = std::move(weights.neighborhoods[i]);
        DecisionVector x(spec.variables);
        for (std::size_t k = 0; k < x.size(); ++k) {
            x[k] = spec.lower[k] + state.rng.uniform() * (spec.upper[k] - spec.lower[k]);
        }
        sp.incumbent.objectives = config.problem->evaluate(x);
        sp.incumbent.decision = std::move(x);
        sp.incumbent.eval_stamp = ++state.eval_count;
        for (std::size_t k = 0; k < state.ideal.size(); ++k) {
            state.ideal[k] = std::min(state.ideal[k], sp.incumbent.objectives[k]);
        }
    }
    state.config = std::move(config);
    return state;
}

std::optional<Solution> generate_offspring(EngineState& state, std::size_t i)
{
    if (i >= state.subproblems.size()) { throw UsageError("generate_offspring: index out of range"); }
    if (state.exhausted()) { return std::nullopt; }
    auto const& nb = state.subproblems[i].neighbors;
    if (nb.size() < 2) { throw UsageError("generate_offspring: neighborhood smaller than 2"); }
    std::size_t const a = state.rng.below(nb.size());
    std::size_t b = state.rng.below(nb.size() - 1);
    if (b >= a) { ++b; }

    auto const& spec = state.config.problem->spec();
    Bounds const bounds{spec.lower, spec.upper};
    auto const& p1 = state.subproblems[nb[a]].incumbent.decision;
    auto const& p2 = state.subproblems[nb[b]].incumbent.decision;
    auto children = sbx(p1, p2, state.config.variation, bounds, state.rng);
    Solution child;
    child.decision = polynomial_mutation(children.first, state.config.variation, bounds, state.rng);
    child.objectives = state.config.problem->evaluate(child.decision);
    child.eval_stamp = ++state.eval_count;
    return child;
}

void environmental_selection(EngineState& state, std::size_t i, Solution const& child)
{
    for (std::size_t k = 0; k < state.ideal.size(); ++k) { state.ideal[k] = std::min(state.ideal[k], child.objectives[k]); }
    for (auto j : state.subproblems[i].neighbors) {
        auto& sp = state.subproblems[j];
        auto const kind = state.config.scalarization;
        if (scalarize(kind, child.objectives, sp.weight, state.ideal) <
            scalarize(kind, sp.incumbent.objectives, sp.weight, state.ideal)) {
            sp.incumbent = child;
        }
    }
}

std::vector<Solution> run_generation(EngineState& state)
{
    std::vector<Solution> offspring;
    offspring.reserve(state.subproblems.size());
    for (std::size_t i = 0; i < state.subproblems.size(); ++i) {
        auto child = generate_offspring(state, i);
        if (!child) { break; }
        environmental_selection(state, i, *child);
        offspring.push_back(std::move(*child));
    }
    ++state.generation;
    return offspring;
}

void recompute_neighborhoods(EngineState& state)
{
    auto const hoods = nearest_neighborhoods(state.weights(), state.neighborhood);
    for (std::size_t i = 0; i < state.subproblems.size(); ++i) { state.subproblems[i].neighbors = hoods[i]; }
}

} // namespace atmoead
