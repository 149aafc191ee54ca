#pragma once

// Riesz s-energy of point sets and the subset-selection kernel built on it.
// Removing a member a from a set A leaves E(A \ a) = E(A) - 2 c_a where c_a
// is a's contribution, so minimizing the remaining energy removes the member
// with the largest contribution.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "atmoead/core.hpp"
#include "atmoead/kernels.hpp"

namespace atmoead {

/// 1 / |p - q|^s; +inf for coincident points.
double pair_energy(std::span<const double> p, std::span<const double> q, double s);

/// Sum over ordered pairs i != j of pair_energy, so every unordered pair counts
/// twice. Coincident pairs contribute 1/eps^s.
double set_energy(std::span<const ObjectiveVector> points, double s);

/// Maintains per-member contributions under insertion and removal.
class EnergySelector {
public:
    explicit EnergySelector(double s) : s_(s) {}

    void assign(std::vector<ObjectiveVector> points);
    void insert(ObjectiveVector point);
    void erase(std::size_t index);

    /// Member whose removal leaves the lowest energy; ties go to the later index.
    std::size_t worst() const;
    std::size_t worst(std::vector<bool> const& protect) const;

    std::size_t size() const { return points_.size(); }
    std::vector<ObjectiveVector> const& points() const { return points_; }
    std::vector<kernels::EnergyTerm> const& contributions() const { return contrib_; }
    double energy() const;

private:
    double s_;
    std::vector<ObjectiveVector> points_;
    std::vector<kernels::EnergyTerm> contrib_;
};

struct EnergyDeletion {
    std::vector<Solution> kept;
    Solution removed;
    std::size_t removed_index = 0;
};

/// Removes the member whose removal minimizes the remaining set's energy,
/// measured on objectives normalized by `bounds`.
EnergyDeletion energy_delete(std::span<const Solution> set, double s, ObjectiveBounds const& bounds);

/// Same, normalizing by the set's own extent.
EnergyDeletion energy_delete(std::span<const Solution> set, double s);

/// Indices (ascending) of `keep` points retained after repeatedly deleting
/// the highest-contribution unprotected member.
std::vector<std::size_t> energy_subset(std::span<const ObjectiveVector> points, std::size_t keep, double s,
                                       std::vector<bool> const& protect = {});

/// Steady insert-then-delete selection: starts from `main`, inserts each
/// backup point in order and deletes the worst member after each insertion.
/// Returns, for each surviving member, its index in main ++ backup.
std::vector<std::size_t> steady_selection(std::span<const ObjectiveVector> main,
                                          std::span<const ObjectiveVector> backup, double s);

} // namespace atmoead
