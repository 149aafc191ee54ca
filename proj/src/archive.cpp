#include <algorithm>
#include <numeric>
#include <set>

#include "atmoead/atm.hpp"

namespace atmoead {

Archive archive_update(Archive const& archive, std::span<const Solution> offspring, double s, RandomSource& rng)
{
    if (archive.capacity == 0) { throw UsageError("archive_update: zero capacity"); }

    // Merge, keeping the first copy of each objective vector; earlier
    // archive members win over offspring.
    std::vector<Solution> merged;
    std::vector<bool> from_archive;
    std::set<ObjectiveVector> seen;
    auto take = [&](Solution const& sol, bool old) {
        if (seen.insert(sol.objectives).second) {
            merged.push_back(sol);
            from_archive.push_back(old);
        }
    };
    for (auto const& a : archive.members) { take(a, true); }
    for (auto const& o : offspring) { take(o, false); }

    auto const keep = nondominated_indices(objectives_of(merged));
    Archive out{{}, archive.capacity};
    if (keep.size() <= archive.capacity) {
        for (auto i : keep) { out.members.push_back(merged[i]); }
        return out;
    }

    std::vector<std::size_t> old_ids;
    std::vector<std::size_t> new_ids;
    for (auto i : keep) { (from_archive[i] ? old_ids : new_ids).push_back(i); }

    std::vector<ObjectiveVector> filtered;
    for (auto i : keep) { filtered.push_back(merged[i].objectives); }
    auto const bounds = ObjectiveBounds::of(filtered);

    std::vector<std::size_t> main_ids;
    std::vector<std::size_t> backup_ids;
    if (old_ids.size() >= archive.capacity) {
        std::vector<ObjectiveVector> pts;
        for (auto i : old_ids) { pts.push_back(bounds.apply(merged[i].objectives)); }
        std::vector<bool> kept(old_ids.size(), false);
        for (auto k : energy_subset(pts, archive.capacity, s)) { kept[k] = true; }
        for (std::size_t k = 0; k < old_ids.size(); ++k) { (kept[k] ? main_ids : backup_ids).push_back(old_ids[k]); }
        backup_ids.insert(backup_ids.end(), new_ids.begin(), new_ids.end());
    } else {
        main_ids = old_ids;
        std::vector<std::size_t> order(new_ids.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng.engine());
        std::size_t const top_up = archive.capacity - old_ids.size();
        std::vector<bool> chosen(new_ids.size(), false);
        for (std::size_t k = 0; k < top_up; ++k) { chosen[order[k]] = true; }
        for (std::size_t k = 0; k < new_ids.size(); ++k) { (chosen[k] ? main_ids : backup_ids).push_back(new_ids[k]); }
    }

    std::vector<ObjectiveVector> main_pts;
    std::vector<ObjectiveVector> backup_pts;
    for (auto i : main_ids) { main_pts.push_back(bounds.apply(merged[i].objectives)); }
    for (auto i : backup_ids) { backup_pts.push_back(bounds.apply(merged[i].objectives)); }
    for (auto k : steady_selection(main_pts, backup_pts, s)) {
        out.members.push_back(merged[k < main_ids.size() ? main_ids[k] : backup_ids[k - main_ids.size()]]);
    }
    return out;
}

} // namespace atmoead
