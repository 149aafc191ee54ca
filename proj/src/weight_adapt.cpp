#include <algorithm>
#include <map>
#include <numeric>

#include "atmoead/atm.hpp"

namespace atmoead {

namespace {

// Tchebycheff weights come from archive-normalized objectives. Inverse
// Tchebycheff scalarizes raw f - z, so its weight points along a - z and the
// new subproblem's optimum is the archive member itself.
WeightVector added_weight(EngineState const& state, ObjectiveVector const& a, ObjectiveBounds const& bounds)
{
    if (state.config.scalarization == Scalarization::tchebycheff) { return weight_through(bounds.apply(a)); }
    ObjectiveVector shifted(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) { shifted[i] = a[i] - state.ideal[i]; }
    return weight_along(shifted);
}

} // namespace

AdaptationSummary weight_adapt(EngineState& state, Archive const& archive, ConsistencyResult const& consistency,
                               double s)
{
    std::size_t const n = state.config.population;
    AdaptationSummary summary;

    // Add: one subproblem per archive member no population member is near.
    for (std::size_t a = 0; a < archive.members.size() && a < consistency.to_population.size(); ++a) {
        if (consistency.to_population[a] < consistency.r) { continue; }
        Subproblem sp;
        sp.weight = added_weight(state, archive.members[a].objectives, consistency.bounds);
        sp.incumbent = archive.members[a];
        state.subproblems.push_back(std::move(sp));
        ++summary.added;
    }

    // Delete weights sharing an incumbent, keeping the best-scalarized holder.
    auto& subs = state.subproblems;
    auto value = [&](std::size_t i) {
        return scalarize(state.config.scalarization, subs[i].incumbent.objectives, subs[i].weight, state.ideal);
    };
    std::map<ObjectiveVector, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < subs.size(); ++i) { holders[subs[i].incumbent.objectives].push_back(i); }
    std::vector<std::pair<double, std::size_t>> redundant;
    for (auto& [obj, ids] : holders) {
        if (ids.size() < 2) { continue; }
        auto const best = *std::min_element(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            double const va = value(a);
            double const vb = value(b);
            return va != vb ? va < vb : a < b;
        });
        for (auto i : ids) {
            if (i != best) { redundant.emplace_back(value(i), i); }
        }
    }
    std::sort(redundant.begin(), redundant.end(),
              [](auto const& a, auto const& b) { return a.first != b.first ? a.first > b.first : a.second > b.second; });
    std::vector<bool> drop(subs.size(), false);
    std::size_t live = subs.size();
    for (auto const& [v, i] : redundant) {
        if (live <= n) { break; }
        drop[i] = true;
        --live;
        ++summary.removed_redundant;
    }
    std::vector<Subproblem> kept;
    kept.reserve(live);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!drop[i]) { kept.push_back(std::move(subs[i])); }
    }
    subs = std::move(kept);

    // Trim the rest by energy on normalized incumbents: the first N form the
    // main set, later ones are inserted one by one.
    if (subs.size() > n) {
        std::vector<ObjectiveVector> main_pts;
        std::vector<ObjectiveVector> backup_pts;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            (i < n ? main_pts : backup_pts).push_back(consistency.bounds.apply(subs[i].incumbent.objectives));
        }
        auto survivors = steady_selection(main_pts, backup_pts, s);
        std::sort(survivors.begin(), survivors.end());
        summary.removed_by_energy = subs.size() - survivors.size();
        std::vector<Subproblem> trimmed;
        trimmed.reserve(n);
        for (auto i : survivors) { trimmed.push_back(std::move(subs[i])); }
        subs = std::move(trimmed);
    }

    recompute_neighborhoods(state);
    return summary;
}

} // namespace atmoead
