#pragma once

// Weight adaptation trigger: an energy-maintained archive, a stagnation
// counter over the weight/incumbent mapping, a population-vs-archive
// consistency test, and add/delete weight adaptation that only runs when the
// population is stagnant and inconsistent with the archive.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "atmoead/core.hpp"
#include "atmoead/energy.hpp"
#include "atmoead/moead.hpp"

namespace atmoead {

struct Archive {
    std::vector<Solution> members;
    std::size_t capacity = 0;
};

/// Merges the offspring, drops exact objective duplicates and dominated
/// members, then trims to capacity: previous members (topped up with random
/// offspring) form the main set and each remaining survivor is inserted in
/// turn followed by removal of the highest-energy member. Energy uses
/// objectives normalized by the merged non-dominated set's extent.
Archive archive_update(Archive const& archive, std::span<const Solution> offspring, double s, RandomSource& rng);

enum class StagnationMode {
    incumbents, // weight-indexed incumbent objective vectors must be identical
    counts,     // only the per-weight sharing counts must be identical
    tolerance,  // no incumbent moved farther than a tolerance (population-normalized)
};

class StagnationTracker {
public:
    StagnationTracker(std::size_t fre, StagnationMode mode = StagnationMode::incumbents, double tolerance = 0.0);

    /// Compares with the previous table, updates the counter, stores the
    /// table. True once the counter has reached fre.
    bool update(CorrespondenceTable const& table);

    /// Forgets history and takes `table` as the new baseline.
    void reset(CorrespondenceTable const& table);

    std::size_t count() const { return count_; }
    std::size_t fre() const { return fre_; }
    bool primed() const { return previous_.has_value(); }

private:
    bool same(CorrespondenceTable const& table) const;

    std::size_t fre_;
    StagnationMode mode_;
    double tolerance_;
    std::size_t count_ = 0;
    std::optional<CorrespondenceTable> previous_;
};

struct ConsistencyResult {
    bool consistent = true;
    double r = 0.0;
    std::vector<double> to_population; // d(a) per archive member, normalized space
    std::vector<double> to_archive;    // nearest other archive member, normalized space
    ObjectiveBounds bounds;            // archive extent used for normalization
};

/// Consistent iff every archive member lies strictly within r of some
/// population member, r = sqrt(M) * median nearest-neighbour distance inside
/// the archive; all in archive-normalized coordinates. Fewer than two archive
/// members is reported as consistent.
ConsistencyResult consistency_detect(std::span<const Solution> population, std::span<const Solution> archive);

struct AdaptationSummary {
    std::size_t added = 0;
    std::size_t removed_redundant = 0;
    std::size_t removed_by_energy = 0;
};

/// Adds a subproblem for every archive member with d(a) >= r (weight from
/// its normalized objectives for Tchebycheff, along a - z for the inverse
/// form), removes weights that share an incumbent (worst scalarized value
/// first, never below N), then trims to N by energy selection on normalized
/// incumbents. Neighborhoods are rebuilt afterwards.
AdaptationSummary weight_adapt(EngineState& state, Archive const& archive, ConsistencyResult const& consistency,
                               double s);

struct TriggerReport {
    std::size_t generation = 0;
    bool stagnant = false;
    bool consistency_evaluated = false;
    bool consistent = false;
    bool adapted = false;
    double r = 0.0;
    std::size_t archive_size = 0;
    std::size_t population_size = 0;
};

struct AtmParams {
    std::size_t fre = 1;
    double s = 0.0;
    std::size_t archive_capacity = 0;
    double freeze_fraction = 0.9; // no adaptation once eval_count >= fraction * budget
    StagnationMode mode = StagnationMode::incumbents;
    double tolerance = 0.0;
};

struct AtmState {
    AtmParams params;
    Archive archive;
    StagnationTracker tracker;
    std::size_t adaptations = 0;
};

/// Seeds the archive and the tracker from the initial population.
AtmState atm_initialize(EngineState& state, AtmParams params);

/// Archive update, stagnation check, and (if triggered) consistency check
/// and weight adaptation. Call once per generation after run_generation.
TriggerReport atm_step(EngineState& state, AtmState& atm, std::span<const Solution> offspring);

} // namespace atmoead
