#pragma once

#include <cstdint>
#include <span>

#include "atmoead/kernels.hpp"

namespace atmoead::kernels::detail {

double nearest(ObjectiveVector const& p, std::span<const ObjectiveVector> to, std::size_t skip);

EnergyTerm contribution(std::span<const ObjectiveVector> points, std::size_t i, double s);

std::uint64_t dominated_in_block(std::span<const ObjectiveVector> points,
                                 std::span<const double> lower, std::span<const double> ref,
                                 std::uint64_t count, std::uint64_t seed, std::uint64_t block);

} // namespace atmoead::kernels::detail
