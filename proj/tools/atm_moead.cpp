// Command-line front end: single runs, batches, scoring and data export.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atmoead/csv.hpp"
#include "atmoead/harness.hpp"

using namespace atmoead;

namespace {

void print_result(RunResult const& r)
{
    std::printf("%s  IGD %.6E  HV %.6E%s  evaluations %lld  generations %zu  adaptations %zu  %.2fs\n",
                run_stem(r.config).c_str(), r.igd, r.hv.value, r.hv.exact ? "" : " (MC)",
                static_cast<long long>(r.evaluations), r.generations, r.adaptations, r.wall_seconds);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MOEA/D with triggered weight adaptation"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string algorithm = "atm-moead";
    std::string config_file;
    std::filesystem::path out_dir;

    auto* run_cmd = app.add_subcommand("run", "Run one configuration");
    run_cmd->add_option("--config", config_file, "JSON file with a run object; flags override it");
    run_cmd->add_option("--problem", cfg.problem, "Problem name, e.g. DTLZ2");
    run_cmd->add_option("--objectives,-m", cfg.objectives, "Number of objectives");
    run_cmd->add_option("--algorithm", algorithm, "atm-moead or moead-fixed");
    run_cmd->add_option("--seed", cfg.seed, "Random seed");
    run_cmd->add_option("--population", cfg.population, "Population size (default by M)");
    run_cmd->add_option("--budget", cfg.budget, "Evaluation budget (default by M)");
    run_cmd->add_option("--fre-fraction", cfg.fre_fraction, "Stagnation window as a fraction of generations");
    run_cmd->add_option("--out", out_dir, "Output directory");

    std::size_t replications = 0;
    std::uint64_t base_seed = 0;
    std::string preset;
    auto* batch_cmd = app.add_subcommand("batch", "Run replicated configurations in parallel");
    batch_cmd->add_option("--config", config_file, "Batch JSON file");
    batch_cmd->add_option("--preset", preset, "Built-in batch ('desk')");
    batch_cmd->add_option("--replications", replications, "Replicates per configuration");
    batch_cmd->add_option("--base-seed", base_seed, "Seed of the first replicate");
    batch_cmd->add_option("--out", out_dir, "Output directory")->required();

    std::filesystem::path front_file;
    auto* score_cmd = app.add_subcommand("score", "Score a front CSV with IGD and HV");
    score_cmd->add_option("--front", front_file, "CSV with one point per row")->required();
    score_cmd->add_option("--problem", cfg.problem, "Problem name")->required();
    score_cmd->add_option("--objectives,-m", cfg.objectives, "Number of objectives")->required();

    std::size_t points = 0;
    bool header = false;
    auto* front_cmd = app.add_subcommand("front", "Write a Pareto front sample as CSV");
    front_cmd->add_option("--problem", cfg.problem, "Problem name")->required();
    front_cmd->add_option("--objectives,-m", cfg.objectives, "Number of objectives")->required();
    front_cmd->add_option("--points", points, "Sample size (default by M)");
    front_cmd->add_flag("--header", header, "Emit an f1..fM header row");

    std::size_t population = 0;
    auto* weights_cmd = app.add_subcommand("weights", "Write the initial weight vectors as CSV");
    weights_cmd->add_option("--objectives,-m", cfg.objectives, "Number of objectives")->required();
    weights_cmd->add_option("--population", population, "Number of weights (default by M)");
    weights_cmd->add_flag("--header", header, "Emit a header row");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            RunConfig base;
            if (!config_file.empty()) {
                std::ifstream in(config_file, std::ios::binary);
                if (!in) { throw ConfigError("cannot read " + config_file); }
                std::stringstream buf;
                buf << in.rdbuf();
                base = parse_run_config(buf.str());
            }
            if (run_cmd->count("--problem")) { base.problem = cfg.problem; }
            if (run_cmd->count("--objectives")) { base.objectives = cfg.objectives; }
            if (run_cmd->count("--algorithm") || config_file.empty()) { base.algorithm = parse_algorithm(algorithm); }
            if (run_cmd->count("--seed")) { base.seed = cfg.seed; }
            if (run_cmd->count("--population")) { base.population = cfg.population; }
            if (run_cmd->count("--budget")) { base.budget = cfg.budget; }
            if (run_cmd->count("--fre-fraction")) { base.fre_fraction = cfg.fre_fraction; }
            auto const result = run(base);
            print_result(result);
            if (!out_dir.empty()) { write_run_files(result, out_dir); }
        } else if (*batch_cmd) {
            BatchSpec spec;
            if (preset == "desk") {
                spec = desk_preset();
            } else if (!preset.empty()) {
                throw ConfigError("preset: unknown '" + preset + "'");
            } else if (!config_file.empty()) {
                spec = load_batch_spec(config_file);
            } else {
                throw ConfigError("batch: give --config or --preset");
            }
            if (batch_cmd->count("--replications")) { spec.replications = replications; }
            if (batch_cmd->count("--base-seed")) { spec.base_seed = base_seed; }
            auto const outcome = batch(spec, out_dir);
            write_summary_csv(std::cout, outcome.summary);
            for (auto const& e : outcome.errors) { std::cerr << "failed: " << e << '\n'; }
            return outcome.errors.empty() ? 0 : 1;
        } else if (*score_cmd) {
            auto const problem = cached_problem(cfg.problem, cfg.objectives);
            auto const front = load_points(front_file);
            for (auto const& p : front) {
                if (p.size() != problem->objectives()) { throw ConfigError("front: column count differs from M"); }
            }
            auto const& ref = cached_reference(*problem, default_reference_size(cfg.objectives));
            auto const h = hv(front, problem->hv_reference());
            std::cout << "igd," << format_number(igd(front, *problem, ref)) << '\n';
            std::cout << "hv," << format_number(h.value) << '\n';
        } else if (*front_cmd) {
            auto const problem = cached_problem(cfg.problem, cfg.objectives);
            auto const n = points ? points : default_reference_size(cfg.objectives);
            write_points(std::cout, problem->sample_front(n), header);
        } else if (*weights_cmd) {
            auto const n = population ? population : default_population(cfg.objectives);
            write_points(std::cout, weights_for_population(cfg.objectives, n).vectors, header);
        }
    } catch (UsageError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
