#include "atmoead/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "atmoead/core.hpp"

namespace atmoead {

double mean(std::span<const double> values)
{
    if (values.empty()) { throw UsageError("mean of an empty sample"); }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values)
{
    if (values.size() < 2) { return 0.0; }
    double const mu = mean(values);
    double ss = 0.0;
    for (double v : values) { ss += (v - mu) * (v - mu); }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

// Doubled midranks (integers) of the pooled sample, plus tie group sizes.
std::vector<long> doubled_ranks(std::vector<double> const& pooled, std::vector<std::size_t>& ties)
{
    std::size_t const n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
    std::vector<long> rank(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[order[j]] == pooled[order[i]]) { ++j; }
        // Ranks i+1 .. j share the midrank (i + 1 + j) / 2.
        for (std::size_t k = i; k < j; ++k) { rank[order[k]] = static_cast<long>(i + 1 + j); }
        ties.push_back(j - i);
        i = j;
    }
    return rank;
}

double exact_p(std::vector<long> const& rank, std::size_t n, long observed)
{
    // ways[k][s]: subsets of size k with doubled-rank sum s.
    long const total = std::accumulate(rank.begin(), rank.end(), 0L);
    std::vector<std::vector<double>> ways(n + 1, std::vector<double>(static_cast<std::size_t>(total) + 1, 0.0));
    ways[0][0] = 1.0;
    for (long r : rank) {
        for (std::size_t k = n; k >= 1; --k) {
            auto& dst = ways[k];
            auto const& src = ways[k - 1];
            for (long s = total; s >= r; --s) { dst[static_cast<std::size_t>(s)] += src[static_cast<std::size_t>(s - r)]; }
        }
    }
    double lower = 0.0;
    double upper = 0.0;
    double all = 0.0;
    for (long s = 0; s <= total; ++s) {
        double const w = ways[n][static_cast<std::size_t>(s)];
        all += w;
        if (s <= observed) { lower += w; }
        if (s >= observed) { upper += w; }
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

} // namespace

double rank_sum_test(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) { throw UsageError("rank_sum_test: empty sample"); }
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    if (std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); })) { return 1.0; }

    std::vector<std::size_t> ties;
    auto const rank = doubled_ranks(pooled, ties);
    long const observed = std::accumulate(rank.begin(), rank.begin() + static_cast<std::ptrdiff_t>(a.size()), 0L);

    if (std::min(a.size(), b.size()) < kExactRankSumLimit && pooled.size() <= kExactPooledLimit) { return exact_p(rank, a.size(), observed); }

    double const n = static_cast<double>(a.size());
    double const m = static_cast<double>(b.size());
    double const big_n = n + m;
    double const u = static_cast<double>(observed) / 2.0 - n * (n + 1.0) / 2.0;
    double tie_sum = 0.0;
    for (auto t : ties) {
        double const td = static_cast<double>(t);
        tie_sum += td * td * td - td;
    }
    double const var = n * m / 12.0 * ((big_n + 1.0) - tie_sum / (big_n * (big_n - 1.0)));
    if (!(var > 0.0)) { return 1.0; }
    double const z = std::max(0.0, std::abs(u - n * m / 2.0) - 0.5) / std::sqrt(var);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

} // namespace atmoead
