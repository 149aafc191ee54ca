#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atmoead/atm.hpp"
#include "atmoead/indicators.hpp"
#include "atmoead/moead.hpp"
#include "atmoead/problems.hpp"

namespace atmoead {

enum class Algorithm { atm_moead, moead_fixed };

std::string_view to_string(Algorithm a);
/// "atm-moead" or "moead-fixed"; throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);

std::string_view to_string(Scalarization s);
/// "tchebycheff" or "inverse-tchebycheff"; throws ConfigError otherwise.
Scalarization parse_scalarization(std::string_view name);

std::size_t default_population(std::size_t objectives);
std::int64_t default_budget(std::size_t objectives);

/// Generations after initialization: ceil((budget - N) / N).
std::size_t total_generations(std::size_t population, std::int64_t budget);

struct RunConfig {
    std::string problem;
    std::size_t objectives = 0;
    std::size_t population = 0; // 0: default for M
    std::int64_t budget = 0;     // 0: default for M
    Algorithm algorithm = Algorithm::atm_moead;
    double fre_fraction = 0.05;
    double archive_multiplier = 2.0;
    double t_fraction = 0.10;
    double freeze_fraction = 0.9;
    Scalarization scalarization = Scalarization::inverse_tchebycheff;
    StagnationMode stagnation = StagnationMode::tolerance;
    double stagnation_tolerance = 1e-2;
    std::size_t reference_size = 0; // 0: default for M
    std::uint64_t seed = 0;

    /// Copy with defaults filled in. Throws ConfigError naming the bad field.
    RunConfig resolved() const;
    std::size_t fre() const;
    std::size_t archive_capacity() const;
    std::size_t neighborhood() const;
};

/// What an observer sees after each generation; archive and report are
/// null for the fixed-weight baseline.
struct GenerationView {
    EngineState const& state;
    Archive const* archive;
    TriggerReport const* report;
};

using Observer = std::function<void(GenerationView const&)>;

struct RunResult {
    RunConfig config; // resolved
    std::vector<ObjectiveVector> population;
    std::vector<ObjectiveVector> archive;
    std::vector<WeightVector> initial_weights;
    std::vector<WeightVector> final_weights;
    double igd = 0.0;
    HvResult hv;
    std::vector<TriggerReport> events;
    std::size_t adaptations = 0;
    std::int64_t evaluations = 0;
    std::size_t generations = 0;
    double wall_seconds = 0.0; // not serialized
};

/// Shared instance per (name, M), so front extents are computed once.
std::shared_ptr<const Problem> cached_problem(std::string const& name, std::size_t objectives);

/// Reference front of the given size, cached per (name, M, size).
ReferenceFront const& cached_reference(Problem const& problem, std::size_t size);

RunResult run(RunConfig const& config, Observer const& observer = {});

/// Deterministic JSON record (no timing information).
std::string to_json(RunResult const& result);

/// Parses one run object; missing fields keep `base` values.
RunConfig parse_run_config(std::string_view json_text, RunConfig const& base = {});

struct BatchSpec {
    std::vector<RunConfig> configs; // seed field ignored
    std::size_t replications = 1;
    std::uint64_t base_seed = 1;
};

/// JSON file: {"base_seed", "replications", "defaults": {...}, "runs": [{...}]}.
/// A run may list "algorithms": [...] to expand into one config per algorithm.
BatchSpec load_batch_spec(std::filesystem::path const& path);

/// Every M <= 3 benchmark instance, both algorithms, 11 seeds, full budgets.
BatchSpec desk_preset();

struct CellSummary {
    std::string problem;
    std::size_t objectives = 0;
    Algorithm algorithm = Algorithm::atm_moead;
    std::size_t runs = 0;
    std::size_t failures = 0;
    double igd_mean = 0.0;
    double igd_sd = 0.0;
    double hv_mean = 0.0;
    double hv_sd = 0.0;
    // Rank-sum p-values against atm-moead on the same instance (absent for atm-moead itself).
    std::optional<double> igd_p;
    std::optional<double> hv_p;
};

struct BatchOutcome {
    std::vector<std::optional<RunResult>> results; // config-major, replicate-minor
    std::vector<std::string> errors;
    std::vector<CellSummary> summary;
};

/// Runs every (config, replicate) with seed base_seed + replicate, in
/// parallel, then writes per-run JSON and front CSVs, per-cell indicator
/// CSVs, summary.csv and timings.csv under `out_dir`. Failed runs are
/// recorded and the batch continues.
BatchOutcome batch(BatchSpec const& spec, std::filesystem::path const& out_dir);

std::vector<CellSummary> summarize(BatchSpec const& spec, std::vector<std::optional<RunResult>> const& results);

/// "1.234E-02(5.6E-04)"
std::string mean_sd_text(double mean, double sd);

void write_summary_csv(std::ostream& out, std::vector<CellSummary> const& summary);

/// "<problem>-<M>_<algorithm>_seed<k>"
std::string run_stem(RunConfig const& config);

/// Writes <stem>.json, <stem>_population.csv, <stem>_archive.csv and, for
/// atm-moead, <stem>_events.csv into `dir`.
void write_run_files(RunResult const& result, std::filesystem::path const& dir);

} // namespace atmoead
