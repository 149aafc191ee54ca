#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "atmoead/core.hpp"
#include "atmoead/decomposition.hpp"
#include "atmoead/problems.hpp"
#include "atmoead/variation.hpp"

namespace atmoead {

struct EngineConfig {
    std::shared_ptr<const Problem> problem;
    std::size_t population = 0;
    std::int64_t budget = 0; // total evaluations, initial population included
    VariationParams variation;
    std::uint64_t seed = 0;
    std::size_t neighborhood = 0; // 0: neighborhood_size(population)
    Scalarization scalarization = Scalarization::inverse_tchebycheff;
};

struct Subproblem {
    WeightVector weight;
    std::vector<std::size_t> neighbors;
    Solution incumbent;
};

struct EngineState {
    EngineConfig config;
    std::vector<Subproblem> subproblems;
    ObjectiveVector ideal;
    std::int64_t eval_count = 0;
    std::size_t generation = 0;
    std::size_t neighborhood = 0;
    RandomSource rng{0};

    bool exhausted() const { return eval_count >= config.budget; }
    std::vector<WeightVector> weights() const;
    std::vector<ObjectiveVector> incumbent_objectives() const;
    std::vector<Solution> population() const;
};

/// Weights from the lattice, N uniform random decision vectors, ideal point
/// from the initial population. Throws ConfigError for an unusable config.
EngineState initialize(EngineConfig config);

/// Neighborhood mating, SBX then PM, one evaluation. Empty once the budget is spent.
std::optional<Solution> generate_offspring(EngineState& state, std::size_t i);

/// Updates the ideal point, then replaces every neighbor incumbent the child
/// strictly improves under that neighbor's Tchebycheff function.
void environmental_selection(EngineState& state, std::size_t i, Solution const& child);

/// One pass over all subproblems; returns the offspring produced. Stops
/// early, mid-pass, when the budget runs out.
std::vector<Solution> run_generation(EngineState& state);

/// Rebuilds every neighborhood from the current weights.
void recompute_neighborhoods(EngineState& state);

} // namespace atmoead
