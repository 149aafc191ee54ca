#include <algorithm>
#include <cmath>

#include "atmoead/atm.hpp"
#include "atmoead/kernels.hpp"

namespace atmoead {

StagnationTracker::StagnationTracker(std::size_t fre, StagnationMode mode, double tolerance)
    : fre_(fre), mode_(mode), tolerance_(tolerance)
{
    if (fre == 0) { throw ConfigError("stagnation threshold must be at least 1"); }
}

bool StagnationTracker::same(CorrespondenceTable const& table) const
{
    if (mode_ == StagnationMode::counts) { return previous_->counts == table.counts; }
    if (mode_ == StagnationMode::tolerance) {
        auto const& before = previous_->incumbents;
        auto const& after = table.incumbents;
        if (before.size() != after.size()) { return false; }
        auto const bounds = ObjectiveBounds::of(after);
        for (std::size_t i = 0; i < after.size(); ++i) {
            if (distance(bounds.apply(before[i]), bounds.apply(after[i])) > tolerance_) { return false; }
        }
        return true;
    }
    return previous_->same_assignment(table);
}

bool StagnationTracker::update(CorrespondenceTable const& table)
{
    if (previous_ && same(table)) {
        count_ = std::min(count_ + 1, fre_);
    } else {
        count_ = 0;
    }
    previous_ = table;
    return count_ >= fre_;
}

void StagnationTracker::reset(CorrespondenceTable const& table)
{
    count_ = 0;
    previous_ = table;
}

ConsistencyResult consistency_detect(std::span<const Solution> population, std::span<const Solution> archive)
{
    ConsistencyResult out;
    if (archive.size() < 2) { return out; }
    auto [pop, arc] = normalize(population, archive);
    out.bounds = {arc.lower, arc.upper};
    out.to_archive = kernels::nearest_other_distances(arc.points);
    out.to_population = kernels::nearest_distances(arc.points, pop.points);
    double const m = static_cast<double>(archive.front().objectives.size());
    out.r = std::sqrt(m) * median(out.to_archive);
    for (double d : out.to_population) {
        if (!(d < out.r)) {
            out.consistent = false;
            break;
        }
    }
    return out;
}

} // namespace atmoead
