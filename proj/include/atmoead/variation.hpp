#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "atmoead/core.hpp"

namespace atmoead {

struct VariationParams {
    double pc = 1.0;
    double pm = 0.0; // 0 means "use 1/d" when built by for_dimension
    double eta_c = 20.0;
    double eta_m = 20.0;
    // Probability that a variable takes part in crossover at all.
    double per_variable = 0.5;

    static VariationParams for_dimension(std::size_t d);
    void validate() const;
};

struct Bounds {
    std::span<const double> lower;
    std::span<const double> upper;
};

/// Seeded 64-bit Mersenne Twister. One per run; never shared across threads.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n).
    std::size_t below(std::size_t n);
    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

using ChildPair = std::pair<DecisionVector, DecisionVector>;

/// SBX without the final clip. Exposed so the mean-preservation identity can be checked.
ChildPair sbx_unclipped(std::span<const double> p1, std::span<const double> p2, VariationParams const& params,
                        Bounds bounds, RandomSource& rng);

/// Simulated binary crossover; children are clipped to the box.
ChildPair sbx(std::span<const double> p1, std::span<const double> p2, VariationParams const& params, Bounds bounds,
              RandomSource& rng);

/// Bounded polynomial mutation; each variable mutates with probability pm.
DecisionVector polynomial_mutation(std::span<const double> x, VariationParams const& params, Bounds bounds,
                                   RandomSource& rng);

} // namespace atmoead
