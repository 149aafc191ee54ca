#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "atmoead/decomposition.hpp"

using namespace atmoead;

namespace {

void expect_on_simplex(WeightVector const& w)
{
    for (double v : w) { EXPECT_GE(v, 0.0); }
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
}

bool has_unit_vectors(std::vector<WeightVector> const& ws, std::size_t m)
{
    for (std::size_t i = 0; i < m; ++i) {
        WeightVector e(m, 0.0);
        e[i] = 1.0;
        if (std::find(ws.begin(), ws.end(), e) == ws.end()) { return false; }
    }
    return true;
}

} // namespace

TEST(Lattice, Counts)
{
    EXPECT_EQ(simplex_lattice(2, 99).size(), 100u);
    EXPECT_EQ(simplex_lattice(3, 13).size(), 105u);
    auto const two = simplex_lattice(2, 1);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_NE(std::find(two.begin(), two.end(), WeightVector{0, 1}), two.end());
    EXPECT_NE(std::find(two.begin(), two.end(), WeightVector{1, 0}), two.end());
}

TEST(Lattice, TwoLayer)
{
    EXPECT_EQ(two_layer_lattice(10, 3, 0).size(), 220u);
    auto const w = two_layer_lattice(3, 2, 1);
    ASSERT_EQ(w.size(), 6u + 3u);
    for (std::size_t i = 6; i < w.size(); ++i) {
        EXPECT_GE(*std::min_element(w[i].begin(), w[i].end()), 1.0 / 6.0 - 1e-12);
    }
    for (auto const& v : two_layer_lattice(5, 3, 2)) { expect_on_simplex(v); }
}

TEST(WeightsForPopulation, PaperSizes)
{
    EXPECT_EQ(weights_for_population(2, 100).vectors, simplex_lattice(2, 99));
    EXPECT_EQ(weights_for_population(3, 105).vectors, simplex_lattice(3, 13));
    EXPECT_EQ(weights_for_population(10, 220).vectors, simplex_lattice(10, 3));
}

TEST(WeightsForPopulation, TrimmedSetsKeepUnitVectors)
{
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 220}, {3, 100}, {4, 50}, {3, 3}}) {
        auto const set = weights_for_population(m, n);
        ASSERT_EQ(set.vectors.size(), n);
        EXPECT_TRUE(has_unit_vectors(set.vectors, m)) << m << "," << n;
        for (auto const& w : set.vectors) { expect_on_simplex(w); }
        ASSERT_EQ(set.neighborhoods.size(), n);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_EQ(set.neighborhoods[i].size(), neighborhood_size(n));
            EXPECT_EQ(set.neighborhoods[i].front(), i);
        }
    }
    EXPECT_THROW(weights_for_population(3, 2), ConfigError);
}

TEST(Neighborhoods, SortedByDistance)
{
    auto const w = simplex_lattice(2, 9);
    auto const hoods = nearest_neighborhoods(w, 3);
    EXPECT_EQ(hoods[0], (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(hoods[5].front(), 5u);
    for (auto const& h : hoods) {
        for (std::size_t k = 2; k < h.size(); ++k) {
            EXPECT_LE(squared_distance(w[h[0]], w[h[k - 1]]), squared_distance(w[h[0]], w[h[k]]) + 1e-15);
        }
    }
    EXPECT_EQ(neighborhood_size(100), 10u);
    EXPECT_EQ(neighborhood_size(105), 10u);
    EXPECT_EQ(neighborhood_size(15), 2u);
}

TEST(Tchebycheff, Examples)
{
    EXPECT_DOUBLE_EQ(tchebycheff(std::vector{2.0, 4.0}, std::vector{0.5, 0.5}, std::vector{0.0, 0.0}), 2.0);
    EXPECT_DOUBLE_EQ(tchebycheff(std::vector{1.0, 3.0}, std::vector{0.3, 0.7}, std::vector{1.0, 3.0}), 0.0);
    EXPECT_DOUBLE_EQ(tchebycheff(std::vector{3.0, 100.0}, std::vector{1.0, 0.0}, std::vector{0.0, 0.0}), 3.0);
    EXPECT_DOUBLE_EQ(tchebycheff(std::vector{3.0, 4e6}, std::vector{1.0, 0.0}, std::vector{0.0, 0.0}), 4.0);
}

TEST(Tchebycheff, MonotoneInEachObjective)
{
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 5000; ++k) {
        std::vector<double> f{u(gen), u(gen), u(gen)};
        std::vector<double> w{u(gen), u(gen), u(gen)};
        std::vector<double> const z{0, 0, 0};
        auto g = f;
        g[k % 3] += u(gen);
        EXPECT_GE(tchebycheff(g, w, z), tchebycheff(f, w, z));
        EXPECT_GE(inverse_tchebycheff(g, w, z), inverse_tchebycheff(f, w, z));
    }
}

TEST(InverseTchebycheff, OptimumLiesAlongWeight)
{
    // Dense quarter circle; the minimizer should point in the weight's direction.
    std::vector<ObjectiveVector> front;
    for (int k = 0; k <= 100000; ++k) {
        double const t = 0.5 * M_PI * k / 100000.0;
        front.push_back({std::cos(t), std::sin(t)});
    }
    std::vector<double> const z{0, 0};
    for (double a : {0.1, 0.3, 0.5, 0.8}) {
        std::vector<double> const w{a, 1 - a};
        auto const best = *std::min_element(front.begin(), front.end(), [&](auto const& p, auto const& q) {
            return inverse_tchebycheff(p, w, z) < inverse_tchebycheff(q, w, z);
        });
        EXPECT_NEAR(best[0] / best[1], a / (1 - a), 1e-3 * (1 + a / (1 - a)));
    }
}

TEST(WeightTransforms, ThroughAndAlong)
{
    auto const w = weight_through(std::vector{0.25, 0.75});
    EXPECT_DOUBLE_EQ(w[0], 0.75);
    EXPECT_DOUBLE_EQ(w[1], 0.25);
    // The Tchebycheff terms balance at the point the weight was built from.
    EXPECT_NEAR(w[0] * 0.25, w[1] * 0.75, 1e-15);

    auto const a = weight_along(std::vector{1.0, 3.0});
    EXPECT_DOUBLE_EQ(a[0], 0.25);
    EXPECT_DOUBLE_EQ(a[1], 0.75);
    EXPECT_EQ(weight_along(std::vector{0.0, 0.0}), (WeightVector{0.5, 0.5}));
    expect_on_simplex(weight_through(std::vector{0.0, 0.5, 1.0}));
    EXPECT_EQ(weight_for(Scalarization::tchebycheff, std::vector{0.25, 0.75}), w);
    EXPECT_EQ(weight_for(Scalarization::inverse_tchebycheff, std::vector{1.0, 3.0}), a);
}

TEST(Correspondence, Counts)
{
    std::vector<ObjectiveVector> const distinct{{1, 2}, {2, 1}, {0, 3}};
    auto const t = corresponding_weight_counts(distinct);
    EXPECT_EQ(t.counts, (std::vector<std::size_t>{1, 1, 1}));

    std::vector<ObjectiveVector> const shared{{1, 2}, {2, 1}, {1, 2}};
    auto const s = corresponding_weight_counts(shared);
    EXPECT_EQ(s.counts, (std::vector<std::size_t>{2, 1, 2}));
    EXPECT_EQ(s.solution_id[0], s.solution_id[2]);
    EXPECT_NE(s.solution_id[0], s.solution_id[1]);

    EXPECT_TRUE(t.same_assignment(corresponding_weight_counts(distinct)));
    EXPECT_FALSE(t.same_assignment(s));
}
