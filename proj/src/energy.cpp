#include "atmoead/energy.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace atmoead {

double pair_energy(std::span<const double> p, std::span<const double> q, double s)
{
    double const d = distance(p, q);
    if (d == 0.0) { return std::numeric_limits<double>::infinity(); }
    return 1.0 / std::pow(d, s);
}

double set_energy(std::span<const ObjectiveVector> points, double s)
{
    kernels::EnergyTerm total;
    for (auto const& c : kernels::energy_contributions(points, s)) { total += c; }
    return total.value(s);
}

void EnergySelector::assign(std::vector<ObjectiveVector> points)
{
    points_ = std::move(points);
    contrib_ = kernels::energy_contributions(points_, s_);
}

void EnergySelector::insert(ObjectiveVector point)
{
    kernels::EnergyTerm own;
    for (std::size_t j = 0; j < points_.size(); ++j) {
        auto const t = kernels::pair_term(squared_distance(point, points_[j]), s_);
        contrib_[j] += t;
        own += t;
    }
    points_.push_back(std::move(point));
    contrib_.push_back(own);
}

void EnergySelector::erase(std::size_t index)
{
    for (std::size_t j = 0; j < points_.size(); ++j) {
        if (j != index) { contrib_[j] -= kernels::pair_term(squared_distance(points_[index], points_[j]), s_); }
    }
    points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(index));
    contrib_.erase(contrib_.begin() + static_cast<std::ptrdiff_t>(index));
}

std::size_t EnergySelector::worst() const
{
    return worst(std::vector<bool>{});
}

std::size_t EnergySelector::worst(std::vector<bool> const& protect) const
{
    std::size_t best = points_.size();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!protect.empty() && protect[i]) { continue; }
        if (best == points_.size() || !(contrib_[i] < contrib_[best])) { best = i; }
    }
    if (best == points_.size()) { throw UsageError("energy selection: no removable member"); }
    return best;
}

double EnergySelector::energy() const
{
    kernels::EnergyTerm total;
    for (auto const& c : contrib_) { total += c; }
    return total.value(s_);
}

EnergyDeletion energy_delete(std::span<const Solution> set, double s, ObjectiveBounds const& bounds)
{
    if (set.size() < 2) { throw UsageError("energy_delete needs at least two members"); }
    EnergySelector sel(s);
    sel.assign(bounds.apply(objectives_of(set)));
    auto const victim = sel.worst();
    EnergyDeletion out;
    out.removed_index = victim;
    out.removed = set[victim];
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i != victim) { out.kept.push_back(set[i]); }
    }
    return out;
}

EnergyDeletion energy_delete(std::span<const Solution> set, double s)
{
    return energy_delete(set, s, ObjectiveBounds::of(set));
}

std::vector<std::size_t> energy_subset(std::span<const ObjectiveVector> points, std::size_t keep, double s,
                                       std::vector<bool> const& protect)
{
    std::vector<std::size_t> ids(points.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::vector<bool> prot(points.size(), false);
    for (std::size_t i = 0; i < protect.size() && i < points.size(); ++i) { prot[i] = protect[i]; }

    EnergySelector sel(s);
    sel.assign({points.begin(), points.end()});
    while (sel.size() > keep) {
        auto const victim = sel.worst(prot);
        sel.erase(victim);
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(victim));
        prot.erase(prot.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return ids;
}

std::vector<std::size_t> steady_selection(std::span<const ObjectiveVector> main,
                                          std::span<const ObjectiveVector> backup, double s)
{
    std::vector<std::size_t> ids(main.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    EnergySelector sel(s);
    sel.assign({main.begin(), main.end()});
    for (std::size_t b = 0; b < backup.size(); ++b) {
        sel.insert(backup[b]);
        ids.push_back(main.size() + b);
        auto const victim = sel.worst();
        sel.erase(victim);
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return ids;
}

} // namespace atmoead
