#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "atmoead/variation.hpp"

using namespace atmoead;

namespace {

struct Box {
    std::vector<double> lower;
    std::vector<double> upper;
    Bounds bounds() const { return {lower, upper}; }
};

Box unit_box(std::size_t d) { return {std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)}; }

// CDF of the bounded polynomial perturbation delta for a variable at x in
// [0,1], obtained by inverting the two branches of the sampling map.
double pm_cdf(double t, double x, double eta)
{
    double const e = eta + 1.0;
    if (t < 0.0) {
        double const a = std::pow(1.0 - x, e);
        return std::max(0.0, (std::pow(1.0 + t, e) - a) / (2.0 * (1.0 - a)));
    }
    double const a = std::pow(x, e);
    return std::min(1.0, (2.0 - a - std::pow(1.0 - t, e)) / (2.0 * (1.0 - a)));
}

} // namespace

TEST(Sbx, DisabledCrossoverCopiesParents)
{
    auto const box = unit_box(5);
    VariationParams params = VariationParams::for_dimension(5);
    params.pc = 0.0;
    RandomSource rng(1);
    std::vector<double> const p1{0.1, 0.2, 0.3, 0.4, 0.5};
    std::vector<double> const p2{0.9, 0.8, 0.7, 0.6, 0.5};
    auto const [c1, c2] = sbx(p1, p2, params, box.bounds(), rng);
    EXPECT_EQ(c1, p1);
    EXPECT_EQ(c2, p2);
}

TEST(Sbx, IdenticalParentsGiveIdenticalChildren)
{
    auto const box = unit_box(4);
    auto const params = VariationParams::for_dimension(4);
    RandomSource rng(2);
    std::vector<double> const p{0.3, 0.0, 1.0, 0.75};
    for (int k = 0; k < 100; ++k) {
        auto const [c1, c2] = sbx(p, p, params, box.bounds(), rng);
        EXPECT_EQ(c1, p);
        EXPECT_EQ(c2, p);
    }
}

TEST(Sbx, MeanPreservedBeforeClipping)
{
    auto const box = unit_box(8);
    auto const params = VariationParams::for_dimension(8);
    RandomSource rng(3);
    for (int k = 0; k < 2000; ++k) {
        std::vector<double> p1(8);
        std::vector<double> p2(8);
        for (auto& v : p1) { v = rng.uniform(); }
        for (auto& v : p2) { v = rng.uniform(); }
        auto const [c1, c2] = sbx_unclipped(p1, p2, params, box.bounds(), rng);
        for (std::size_t i = 0; i < 8; ++i) { EXPECT_NEAR(0.5 * (c1[i] + c2[i]), 0.5 * (p1[i] + p2[i]), 1e-12); }
    }
}

TEST(Sbx, ChildrenWithinBoundsAndHalfTheVariablesCross)
{
    Box const box{{-1.0, 0.0, 2.0}, {1.0, 5.0, 3.0}};
    auto const params = VariationParams::for_dimension(3);
    RandomSource rng(4);
    std::size_t changed = 0;
    std::size_t total = 0;
    for (int k = 0; k < 20000; ++k) {
        std::vector<double> p1{rng.uniform() * 2 - 1, rng.uniform() * 5, 2 + rng.uniform()};
        std::vector<double> p2{rng.uniform() * 2 - 1, rng.uniform() * 5, 2 + rng.uniform()};
        auto const [c1, c2] = sbx(p1, p2, params, box.bounds(), rng);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_GE(c1[i], box.lower[i]);
            EXPECT_LE(c1[i], box.upper[i]);
            EXPECT_GE(c2[i], box.lower[i]);
            EXPECT_LE(c2[i], box.upper[i]);
            // beta = 1 leaves the pair in place; beta = -1 swaps it.
            changed += (c1[i] != p1[i] && c1[i] != p2[i]) ? 1 : 0;
            ++total;
        }
    }
    EXPECT_NEAR(static_cast<double>(changed) / static_cast<double>(total), 0.5, 0.01);
}

TEST(Sbx, SameSeedSameChildren)
{
    auto const box = unit_box(6);
    auto const params = VariationParams::for_dimension(6);
    std::vector<double> const p1{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::vector<double> const p2{0.6, 0.5, 0.4, 0.3, 0.2, 0.1};
    RandomSource a(77);
    RandomSource b(77);
    for (int k = 0; k < 50; ++k) {
        EXPECT_EQ(sbx(p1, p2, params, box.bounds(), a), sbx(p1, p2, params, box.bounds(), b));
        EXPECT_EQ(polynomial_mutation(p1, params, box.bounds(), a), polynomial_mutation(p1, params, box.bounds(), b));
    }
}

TEST(PolynomialMutation, ZeroRateIsIdentity)
{
    auto const box = unit_box(5);
    VariationParams params = VariationParams::for_dimension(5);
    params.pm = 0.0;
    RandomSource rng(5);
    std::vector<double> const x{0.0, 0.25, 0.5, 0.75, 1.0};
    for (int k = 0; k < 100; ++k) { EXPECT_EQ(polynomial_mutation(x, params, box.bounds(), rng), x); }
}

TEST(PolynomialMutation, LowerBoundStaysOnNegativeDraws)
{
    auto const box = unit_box(1);
    VariationParams params = VariationParams::for_dimension(1);
    params.pm = 1.0;
    RandomSource rng(6);
    std::vector<double> const x{0.0};
    std::size_t stayed = 0;
    int const draws = 20000;
    for (int k = 0; k < draws; ++k) {
        auto const y = polynomial_mutation(x, params, box.bounds(), rng);
        EXPECT_GE(y[0], 0.0);
        EXPECT_LE(y[0], 1.0);
        stayed += y[0] == 0.0 ? 1 : 0;
    }
    EXPECT_NEAR(static_cast<double>(stayed) / draws, 0.5, 0.02);
}

TEST(PolynomialMutation, DistributionMatchesAnalyticCdf)
{
    auto const box = unit_box(1);
    VariationParams params = VariationParams::for_dimension(1);
    params.pm = 1.0;
    RandomSource rng(7);
    for (double x0 : {0.5, 0.1}) {
        std::vector<double> const x{x0};
        std::vector<double> deltas;
        int const draws = 100000;
        for (int k = 0; k < draws; ++k) { deltas.push_back(polynomial_mutation(x, params, box.bounds(), rng)[0] - x0); }
        std::sort(deltas.begin(), deltas.end());
        double ks = 0.0;
        for (int k = 0; k < draws; ++k) {
            double const f = pm_cdf(deltas[k], x0, params.eta_m);
            ks = std::max({ks, std::abs(f - static_cast<double>(k) / draws),
                           std::abs(f - static_cast<double>(k + 1) / draws)});
        }
        EXPECT_LT(ks, 0.01) << "x = " << x0;
    }
}

TEST(PolynomialMutation, OutputWithinBounds)
{
    Box const box{{-2.0, 10.0}, {2.0, 11.0}};
    auto params = VariationParams::for_dimension(2);
    params.pm = 1.0;
    RandomSource rng(8);
    for (int k = 0; k < 10000; ++k) {
        std::vector<double> const x{-2.0 + 4.0 * rng.uniform(), 10.0 + rng.uniform()};
        auto const y = polynomial_mutation(x, params, box.bounds(), rng);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_GE(y[i], box.lower[i]);
            EXPECT_LE(y[i], box.upper[i]);
        }
    }
}

TEST(Variation, ParameterValidation)
{
    EXPECT_DOUBLE_EQ(VariationParams::for_dimension(12).pm, 1.0 / 12.0);
    EXPECT_THROW(VariationParams::for_dimension(0), UsageError);
    VariationParams p;
    p.pc = 1.5;
    EXPECT_THROW(p.validate(), ConfigError);
    p.pc = 1.0;
    p.eta_m = 0.0;
    EXPECT_THROW(p.validate(), ConfigError);
}

TEST(RandomSource, UniformAndBelowInRange)
{
    RandomSource rng(9);
    for (int k = 0; k < 10000; ++k) {
        double const u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(rng.below(7), 7u);
    }
    EXPECT_THROW(rng.below(0), UsageError);
}
