#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atmoead/core.hpp"

namespace atmoead {

enum class FrontKind { regular, inverted, nonlinear, disconnected, degenerate, scaled, mixed };

std::string_view to_string(FrontKind kind);

struct ProblemSpec {
    std::string name;
    std::size_t objectives = 0;
    std::size_t variables = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    FrontKind front_kind = FrontKind::regular;
    // IGD on this instance is computed after normalizing by the front's extent.
    bool scaled = false;
};

struct ReferenceFront {
    std::vector<ObjectiveVector> points;
    bool normalized = false;
};

/// A benchmark instance: box-constrained objective function plus a sampler
/// for its analytic Pareto front and the hypervolume reference point used
/// when scoring it.
class Problem {
public:
    using Objective = std::function<void(std::span<const double>, std::span<double>)>;
    using FrontSampler = std::function<std::vector<ObjectiveVector>(std::size_t)>;

    Problem(ProblemSpec spec, Objective objective, FrontSampler front, std::vector<double> hv_reference);

    ProblemSpec const& spec() const { return spec_; }
    std::size_t objectives() const { return spec_.objectives; }
    std::size_t variables() const { return spec_.variables; }

    /// Throws UsageError for wrong length or out-of-bounds input.
    ObjectiveVector evaluate(std::span<const double> x) const;

    /// About n points on the analytic front (never fewer than n unless the
    /// front is a finite set).
    std::vector<ObjectiveVector> sample_front(std::size_t n) const;

    std::vector<double> const& hv_reference() const { return hv_reference_; }

    /// Per-objective extent of the analytic front, from a dense sample.
    ObjectiveBounds const& front_bounds() const;

private:
    ProblemSpec spec_;
    Objective objective_;
    FrontSampler front_;
    std::vector<double> hv_reference_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Builds a named instance ("DTLZ2", "ZDT3", "MaF4", ...) with M objectives.
/// Throws ConfigError for unknown names or unsupported objective counts.
std::shared_ptr<const Problem> make_problem(std::string_view name, std::size_t objectives);

/// Every supported family name.
std::vector<std::string> problem_names();

/// The 36 benchmark instances as (name, M) pairs.
std::vector<std::pair<std::string, std::size_t>> benchmark_instances();

/// 10,000 points for M <= 3, 5,000 for M <= 5, 1,000 beyond.
std::size_t default_reference_size(std::size_t objectives);

/// With `normalized`, coordinates are mapped by the front's own extent.
ReferenceFront pareto_front_sample(Problem const& problem, std::size_t n, bool normalized = false);

} // namespace atmoead
