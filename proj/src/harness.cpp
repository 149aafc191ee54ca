#include "atmoead/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "atmoead/csv.hpp"
#include "atmoead/stats.hpp"
#include "json.hpp"

namespace atmoead {

using Json = nlohmann::ordered_json;

std::string_view to_string(Algorithm a)
{
    return a == Algorithm::atm_moead ? "atm-moead" : "moead-fixed";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "atm-moead") { return Algorithm::atm_moead; }
    if (name == "moead-fixed") { return Algorithm::moead_fixed; }
    throw ConfigError("algorithm: expected atm-moead or moead-fixed, got '" + std::string(name) + "'");
}

std::string_view to_string(Scalarization s)
{
    return s == Scalarization::tchebycheff ? "tchebycheff" : "inverse-tchebycheff";
}

Scalarization parse_scalarization(std::string_view name)
{
    if (name == "tchebycheff") { return Scalarization::tchebycheff; }
    if (name == "inverse-tchebycheff") { return Scalarization::inverse_tchebycheff; }
    throw ConfigError("scalarization: expected tchebycheff or inverse-tchebycheff, got '" + std::string(name) + "'");
}

std::size_t default_population(std::size_t objectives)
{
    switch (objectives) {
    case 2: return 100;
    case 3: return 105;
    default: return 220;
    }
}

std::int64_t default_budget(std::size_t objectives)
{
    switch (objectives) {
    case 2: return 50'000;
    case 3: return 100'000;
    default: return 150'000;
    }
}

std::size_t total_generations(std::size_t population, std::int64_t budget)
{
    auto const n = static_cast<std::int64_t>(population);
    return static_cast<std::size_t>((budget - n + n - 1) / n);
}

RunConfig RunConfig::resolved() const
{
    RunConfig c = *this;
    if (c.problem.empty()) { throw ConfigError("problem: missing"); }
    if (c.objectives < 2) { throw ConfigError("objectives: need at least 2"); }
    auto const problem = cached_problem(c.problem, c.objectives);
    c.problem = problem->spec().name;
    if (c.population == 0) { c.population = default_population(c.objectives); }
    if (c.budget == 0) { c.budget = default_budget(c.objectives); }
    if (c.reference_size == 0) { c.reference_size = default_reference_size(c.objectives); }
    if (c.population < c.objectives) { throw ConfigError("population: smaller than the objective count"); }
    if (c.budget < static_cast<std::int64_t>(c.population)) { throw ConfigError("budget: smaller than the population"); }
    if (!(c.fre_fraction > 0.0 && c.fre_fraction <= 1.0)) { throw ConfigError("fre_fraction: must lie in (0, 1]"); }
    if (!(c.archive_multiplier >= 1.0)) { throw ConfigError("archive_multiplier: must be at least 1"); }
    if (!(c.t_fraction > 0.0 && c.t_fraction <= 1.0)) { throw ConfigError("t_fraction: must lie in (0, 1]"); }
    if (!(c.freeze_fraction > 0.0 && c.freeze_fraction <= 1.0)) { throw ConfigError("freeze_fraction: must lie in (0, 1]"); }
    if (!(c.stagnation_tolerance >= 0.0)) { throw ConfigError("stagnation_tolerance: must be non-negative"); }
    return c;
}

std::size_t RunConfig::fre() const
{
    auto const g = static_cast<double>(total_generations(population, budget));
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(fre_fraction * g)));
}

std::size_t RunConfig::archive_capacity() const
{
    return static_cast<std::size_t>(std::llround(archive_multiplier * static_cast<double>(population)));
}

std::size_t RunConfig::neighborhood() const
{
    auto const t = static_cast<std::size_t>(std::floor(t_fraction * static_cast<double>(population) + 1e-9));
    return std::clamp<std::size_t>(t, 2, population);
}

std::shared_ptr<const Problem> cached_problem(std::string const& name, std::size_t objectives)
{
    static std::mutex lock;
    static std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const Problem>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[{name, objectives}];
    if (!slot) { slot = make_problem(name, objectives); }
    return slot;
}

ReferenceFront const& cached_reference(Problem const& problem, std::size_t size)
{
    static std::mutex lock;
    static std::map<std::tuple<std::string, std::size_t, std::size_t>, std::unique_ptr<ReferenceFront>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[{problem.spec().name, problem.objectives(), size}];
    if (!slot) { slot = std::make_unique<ReferenceFront>(pareto_front_sample(problem, size)); }
    return *slot;
}

RunResult run(RunConfig const& config, Observer const& observer)
{
    auto const start = std::chrono::steady_clock::now();
    RunResult result;
    result.config = config.resolved();
    auto const& cfg = result.config;
    auto const problem = cached_problem(cfg.problem, cfg.objectives);

    EngineConfig engine;
    engine.problem = problem;
    engine.population = cfg.population;
    engine.budget = cfg.budget;
    engine.variation = VariationParams::for_dimension(problem->variables());
    engine.seed = cfg.seed;
    engine.neighborhood = cfg.neighborhood();
    engine.scalarization = cfg.scalarization;
    auto state = initialize(engine);
    result.initial_weights = state.weights();

    std::optional<AtmState> atm;
    if (cfg.algorithm == Algorithm::atm_moead) {
        AtmParams params;
        params.fre = cfg.fre();
        params.s = 2.0 * static_cast<double>(cfg.objectives);
        params.archive_capacity = cfg.archive_capacity();
        params.freeze_fraction = cfg.freeze_fraction;
        params.mode = cfg.stagnation;
        params.tolerance = cfg.stagnation_tolerance;
        atm = atm_initialize(state, params);
    }

    while (!state.exhausted()) {
        auto const offspring = run_generation(state);
        TriggerReport const* report = nullptr;
        if (atm) {
            result.events.push_back(atm_step(state, *atm, offspring));
            report = &result.events.back();
        }
        if (observer) { observer(GenerationView{state, atm ? &atm->archive : nullptr, report}); }
    }

    result.population = state.incumbent_objectives();
    result.final_weights = state.weights();
    if (atm) {
        result.archive = objectives_of(atm->archive.members);
        result.adaptations = atm->adaptations;
    }
    result.evaluations = state.eval_count;
    result.generations = state.generation;
    result.igd = igd(result.population, *problem, cached_reference(*problem, cfg.reference_size));
    result.hv = hv(result.population, problem->hv_reference());
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

namespace {

std::string_view to_string(StagnationMode m)
{
    switch (m) {
    case StagnationMode::incumbents: return "incumbents";
    case StagnationMode::counts: return "counts";
    case StagnationMode::tolerance: return "tolerance";
    }
    return "unknown";
}

StagnationMode parse_stagnation(std::string const& s)
{
    if (s == "incumbents") { return StagnationMode::incumbents; }
    if (s == "counts") { return StagnationMode::counts; }
    if (s == "tolerance") { return StagnationMode::tolerance; }
    throw ConfigError("stagnation: expected incumbents, counts or tolerance, got '" + s + "'");
}

Json config_json(RunConfig const& c)
{
    return Json{{"problem", c.problem},
                {"objectives", c.objectives},
                {"population", c.population},
                {"budget", c.budget},
                {"algorithm", std::string(to_string(c.algorithm))},
                {"fre_fraction", c.fre_fraction},
                {"archive_multiplier", c.archive_multiplier},
                {"t_fraction", c.t_fraction},
                {"freeze_fraction", c.freeze_fraction},
                {"scalarization", std::string(to_string(c.scalarization))},
                {"stagnation", std::string(to_string(c.stagnation))},
                {"stagnation_tolerance", c.stagnation_tolerance},
                {"reference_size", c.reference_size},
                {"seed", c.seed}};
}

template <class T>
void read_field(Json const& j, char const* key, T& out)
{
    if (!j.contains(key)) { return; }
    try {
        out = j.at(key).get<T>();
    } catch (nlohmann::json::exception const& e) {
        throw ConfigError(std::string(key) + ": " + e.what());
    }
}

RunConfig config_from(Json const& j, RunConfig c)
{
    if (!j.is_object()) { throw ConfigError("run config: expected a JSON object"); }
    read_field(j, "problem", c.problem);
    read_field(j, "objectives", c.objectives);
    read_field(j, "population", c.population);
    read_field(j, "budget", c.budget);
    read_field(j, "fre_fraction", c.fre_fraction);
    read_field(j, "archive_multiplier", c.archive_multiplier);
    read_field(j, "t_fraction", c.t_fraction);
    read_field(j, "freeze_fraction", c.freeze_fraction);
    read_field(j, "reference_size", c.reference_size);
    read_field(j, "stagnation_tolerance", c.stagnation_tolerance);
    read_field(j, "seed", c.seed);
    std::string text;
    if (j.contains("algorithm")) {
        read_field(j, "algorithm", text);
        c.algorithm = parse_algorithm(text);
    }
    if (j.contains("scalarization")) {
        read_field(j, "scalarization", text);
        c.scalarization = parse_scalarization(text);
    }
    if (j.contains("stagnation")) {
        read_field(j, "stagnation", text);
        c.stagnation = parse_stagnation(text);
    }
    return c;
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

std::string to_json(RunResult const& r)
{
    Json events = Json::array();
    for (auto const& e : r.events) {
        events.push_back(Json{{"generation", e.generation},
                              {"stagnant", e.stagnant},
                              {"consistency_evaluated", e.consistency_evaluated},
                              {"consistent", e.consistent},
                              {"adapted", e.adapted},
                              {"r", e.r},
                              {"archive_size", e.archive_size}});
    }
    Json j{{"config", config_json(r.config)},
           {"evaluations", r.evaluations},
           {"generations", r.generations},
           {"adaptations", r.adaptations},
           {"igd", r.igd},
           {"hv", Json{{"value", r.hv.value}, {"exact", r.hv.exact}, {"samples", r.hv.samples}}},
           {"population", r.population},
           {"archive", r.archive},
           {"final_weights", r.final_weights},
           {"events", events}};
    return j.dump(1) + "\n";
}

RunConfig parse_run_config(std::string_view json_text, RunConfig const& base)
{
    return config_from(parse_json(json_text), base);
}

BatchSpec load_batch_spec(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) { throw ConfigError("cannot read " + path.string()); }
    std::stringstream buf;
    buf << in.rdbuf();
    auto const j = parse_json(buf.str());
    if (!j.is_object()) { throw ConfigError("batch config: expected a JSON object"); }

    BatchSpec spec;
    read_field(j, "base_seed", spec.base_seed);
    read_field(j, "replications", spec.replications);
    RunConfig defaults;
    if (j.contains("defaults")) { defaults = config_from(j.at("defaults"), defaults); }
    if (!j.contains("runs") || !j.at("runs").is_array()) { throw ConfigError("runs: expected an array"); }
    for (auto const& entry : j.at("runs")) {
        auto const c = config_from(entry, defaults);
        if (entry.contains("algorithms")) {
            std::vector<std::string> names;
            read_field(entry, "algorithms", names);
            for (auto const& name : names) {
                auto copy = c;
                copy.algorithm = parse_algorithm(name);
                spec.configs.push_back(copy.resolved());
            }
        } else {
            spec.configs.push_back(c.resolved());
        }
    }
    return spec;
}

BatchSpec desk_preset()
{
    BatchSpec spec;
    spec.replications = 11;
    spec.base_seed = 1;
    for (auto const& [name, m] : benchmark_instances()) {
        if (m > 3) { continue; }
        for (auto a : {Algorithm::atm_moead, Algorithm::moead_fixed}) {
            RunConfig c;
            c.problem = name;
            c.objectives = m;
            c.algorithm = a;
            spec.configs.push_back(c.resolved());
        }
    }
    return spec;
}

std::string run_stem(RunConfig const& c)
{
    return c.problem + "-" + std::to_string(c.objectives) + "_" + std::string(to_string(c.algorithm)) + "_seed" +
           std::to_string(c.seed);
}

void write_run_files(RunResult const& result, std::filesystem::path const& dir)
{
    std::filesystem::create_directories(dir);
    auto const stem = run_stem(result.config);
    {
        std::ofstream out(dir / (stem + ".json"), std::ios::binary);
        if (!out) { throw ConfigError("cannot write into " + dir.string()); }
        out << to_json(result);
    }
    save_points(dir / (stem + "_population.csv"), result.population);
    save_points(dir / (stem + "_archive.csv"), result.archive);
    if (result.config.algorithm == Algorithm::atm_moead) {
        std::ofstream out(dir / (stem + "_events.csv"), std::ios::binary);
        write_event_log(out, result.events);
    }
}

std::string mean_sd_text(double mean_value, double sd)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3E(%.1E)", mean_value, sd);
    return buf;
}

std::vector<CellSummary> summarize(BatchSpec const& spec, std::vector<std::optional<RunResult>> const& results)
{
    std::vector<CellSummary> cells;
    std::vector<std::vector<double>> igds(spec.configs.size());
    std::vector<std::vector<double>> hvs(spec.configs.size());
    for (std::size_t c = 0; c < spec.configs.size(); ++c) {
        CellSummary cell;
        cell.problem = spec.configs[c].problem;
        cell.objectives = spec.configs[c].objectives;
        cell.algorithm = spec.configs[c].algorithm;
        for (std::size_t r = 0; r < spec.replications; ++r) {
            auto const& res = results[c * spec.replications + r];
            if (!res) {
                ++cell.failures;
                continue;
            }
            igds[c].push_back(res->igd);
            hvs[c].push_back(res->hv.value);
        }
        cell.runs = igds[c].size();
        if (cell.runs > 0) {
            cell.igd_mean = mean(igds[c]);
            cell.igd_sd = sample_sd(igds[c]);
            cell.hv_mean = mean(hvs[c]);
            cell.hv_sd = sample_sd(hvs[c]);
        }
        cells.push_back(cell);
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].algorithm == Algorithm::atm_moead || igds[c].empty()) { continue; }
        for (std::size_t o = 0; o < cells.size(); ++o) {
            if (cells[o].algorithm != Algorithm::atm_moead || cells[o].problem != cells[c].problem ||
                cells[o].objectives != cells[c].objectives || igds[o].empty()) {
                continue;
            }
            cells[c].igd_p = rank_sum_test(igds[o], igds[c]);
            cells[c].hv_p = rank_sum_test(hvs[o], hvs[c]);
            break;
        }
    }
    return cells;
}

void write_summary_csv(std::ostream& out, std::vector<CellSummary> const& summary)
{
    auto opt = [](std::optional<double> const& p) { return p ? format_number(*p) : std::string(); };
    auto sig = [](std::optional<double> const& p) { return p ? std::string(*p < 0.05 ? "1" : "0") : std::string(); };
    out << "problem,objectives,algorithm,runs,failures,igd_mean,igd_sd,igd,igd_p,igd_significant,hv_mean,hv_sd,hv,hv_p,"
           "hv_significant\n";
    for (auto const& c : summary) {
        out << c.problem << ',' << c.objectives << ',' << to_string(c.algorithm) << ',' << c.runs << ',' << c.failures
            << ',' << format_number(c.igd_mean) << ',' << format_number(c.igd_sd) << ','
            << mean_sd_text(c.igd_mean, c.igd_sd) << ',' << opt(c.igd_p) << ',' << sig(c.igd_p) << ','
            << format_number(c.hv_mean) << ',' << format_number(c.hv_sd) << ',' << mean_sd_text(c.hv_mean, c.hv_sd)
            << ',' << opt(c.hv_p) << ',' << sig(c.hv_p) << '\n';
    }
}

BatchOutcome batch(BatchSpec const& spec, std::filesystem::path const& out_dir)
{
    std::size_t const jobs = spec.configs.size() * spec.replications;
    BatchOutcome outcome;
    outcome.results.resize(jobs);
    std::vector<std::string> errors(jobs);

    // Warm the shared caches so workers only read them.
    // Invalid configs are skipped here and reported per run below.
    for (auto const& c : spec.configs) {
        try {
            auto const resolved = c.resolved();
            auto const p = cached_problem(resolved.problem, resolved.objectives);
            p->front_bounds();
            cached_reference(*p, resolved.reference_size);
        } catch (std::exception const&) {
        }
    }

#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t k = 0; k < jobs; ++k) {
        auto config = spec.configs[k / spec.replications];
        config.seed = spec.base_seed + k % spec.replications;
        try {
            outcome.results[k] = run(config);
        } catch (std::exception const& e) {
            errors[k] = run_stem(config) + ": " + e.what();
        }
    }

    for (auto& e : errors) {
        if (!e.empty()) { outcome.errors.push_back(std::move(e)); }
    }
    outcome.summary = summarize(spec, outcome.results);

    auto const runs_dir = out_dir / "runs";
    auto const cells_dir = out_dir / "cells";
    std::filesystem::create_directories(runs_dir);
    std::filesystem::create_directories(cells_dir);
    std::ofstream timings(out_dir / "timings.csv", std::ios::binary);
    timings << "run,seconds\n";
    for (std::size_t c = 0; c < spec.configs.size(); ++c) {
        auto const& cfg = spec.configs[c];
        std::ofstream cell(cells_dir / (cfg.problem + "-" + std::to_string(cfg.objectives) + "_" +
                                        std::string(to_string(cfg.algorithm)) + ".csv"),
                           std::ios::binary);
        cell << "seed,igd,hv\n";
        for (std::size_t r = 0; r < spec.replications; ++r) {
            auto const& res = outcome.results[c * spec.replications + r];
            if (!res) { continue; }
            write_run_files(*res, runs_dir);
            cell << res->config.seed << ',' << format_number(res->igd) << ',' << format_number(res->hv.value) << '\n';
            timings << run_stem(res->config) << ',' << format_number(res->wall_seconds) << '\n';
        }
    }
    std::ofstream summary(out_dir / "summary.csv", std::ios::binary);
    write_summary_csv(summary, outcome.summary);
    if (!outcome.errors.empty()) {
        std::ofstream failures(out_dir / "failures.txt", std::ios::binary);
        for (auto const& e : outcome.errors) { failures << e << '\n'; }
    }
    return outcome;
}

} // namespace atmoead
