#include "atmoead/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "atmoead/energy.hpp"

namespace atmoead {

namespace {

void lattice_rec(std::size_t m, std::size_t h, std::size_t left, std::vector<std::size_t>& counts,
                 std::vector<WeightVector>& out)
{
    if (counts.size() + 1 == m) {
        counts.push_back(left);
        WeightVector w(m);
        for (std::size_t i = 0; i < m; ++i) { w[i] = static_cast<double>(counts[i]) / static_cast<double>(h); }
        out.push_back(std::move(w));
        counts.pop_back();
        return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
        counts.push_back(c);
        lattice_rec(m, h, left - c, counts, out);
        counts.pop_back();
    }
}

bool near_equal(WeightVector const& a, WeightVector const& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-12) { return false; }
    }
    return true;
}

std::size_t two_layer_count(std::size_t m, std::size_t h1, std::size_t h2)
{
    return binomial(h1 + m - 1, m - 1) + (h2 > 0 ? binomial(h2 + m - 1, m - 1) : 0);
}

} // namespace

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) { return 0; }
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) { r = r * static_cast<double>(n - k + i) / static_cast<double>(i); }
    return static_cast<std::size_t>(std::llround(r));
}

std::vector<WeightVector> simplex_lattice(std::size_t m, std::size_t h)
{
    if (m < 1 || h < 1) { throw UsageError("simplex_lattice: need M >= 1 and H >= 1"); }
    std::vector<WeightVector> out;
    out.reserve(binomial(h + m - 1, m - 1));
    std::vector<std::size_t> counts;
    lattice_rec(m, h, h, counts, out);
    return out;
}

std::vector<WeightVector> two_layer_lattice(std::size_t m, std::size_t h1, std::size_t h2)
{
    auto out = simplex_lattice(m, h1);
    if (h2 == 0) { return out; }
    double const shift = 1.0 / (2.0 * static_cast<double>(m));
    for (auto w : simplex_lattice(m, h2)) {
        for (auto& v : w) { v = 0.5 * v + shift; }
        bool const dup = std::any_of(out.begin(), out.end(), [&](auto const& o) { return near_equal(o, w); });
        if (!dup) { out.push_back(std::move(w)); }
    }
    return out;
}

std::size_t neighborhood_size(std::size_t population)
{
    return std::max<std::size_t>(2, population / 10);
}

std::vector<std::vector<std::size_t>> nearest_neighborhoods(std::span<const WeightVector> weights,
                                                            std::size_t t)
{
    std::size_t const n = weights.size();
    t = std::min(t, n);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::pair<double, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) { d[j] = {j == i ? -1.0 : squared_distance(weights[i], weights[j]), j}; }
        std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(t), d.end());
        out[i].reserve(t);
        for (std::size_t k = 0; k < t; ++k) { out[i].push_back(d[k].second); }
    }
    return out;
}

WeightSet weights_for_population(std::size_t m, std::size_t n)
{
    if (m < 2) { throw ConfigError("weights_for_population: need at least 2 objectives"); }
    if (n < m) { throw ConfigError("weights_for_population: population smaller than objective count"); }

    std::vector<WeightVector> w;
    if (m == 2) {
        w = simplex_lattice(2, n - 1);
    } else if (m == 3) {
        std::size_t h = 1;
        while (binomial(h + 2, 2) < n) { ++h; }
        w = simplex_lattice(3, h);
    } else {
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        std::size_t best_h1 = 0;
        std::size_t best_h2 = 0;
        for (std::size_t h1 = 1; binomial(h1 + m - 1, m - 1) <= 4 * n + m; ++h1) {
            for (std::size_t h2 = 0; h2 < h1; ++h2) {
                auto const c = two_layer_count(m, h1, h2);
                if (c >= n && c < best_count) {
                    best_count = c;
                    best_h1 = h1;
                    best_h2 = h2;
                }
                if (c >= n) { break; }
            }
            if (binomial(h1 + m - 1, m - 1) >= n) { break; }
        }
        if (best_h1 == 0) { throw ConfigError("weights_for_population: no lattice reaches the population size"); }
        w = two_layer_lattice(m, best_h1, best_h2);
    }

    if (w.size() < n) { throw ConfigError("weights_for_population: no lattice reaches the population size"); }
    if (w.size() > n) {
        std::vector<bool> protect(w.size(), false);
        for (std::size_t i = 0; i < w.size(); ++i) {
            protect[i] = std::count_if(w[i].begin(), w[i].end(), [](double v) { return v == 1.0; }) == 1;
        }
        auto const keep = energy_subset(w, n, 2.0 * static_cast<double>(m), protect);
        std::vector<WeightVector> trimmed;
        trimmed.reserve(n);
        for (auto i : keep) { trimmed.push_back(w[i]); }
        w = std::move(trimmed);
    }

    WeightSet set;
    set.neighborhoods = nearest_neighborhoods(w, neighborhood_size(n));
    set.vectors = std::move(w);
    return set;
}

double tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z)
{
    double v = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) { v = std::max(v, std::max(w[i], kWeightFloor) * std::abs(f[i] - z[i])); }
    return v;
}

double inverse_tchebycheff(std::span<const double> f, std::span<const double> w, std::span<const double> z)
{
    double v = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) { v = std::max(v, std::abs(f[i] - z[i]) / std::max(w[i], kWeightFloor)); }
    return v;
}

double scalarize(Scalarization kind, std::span<const double> f, std::span<const double> w, std::span<const double> z)
{
    return kind == Scalarization::tchebycheff ? tchebycheff(f, w, z) : inverse_tchebycheff(f, w, z);
}

WeightVector weight_for(Scalarization kind, std::span<const double> point)
{
    return kind == Scalarization::tchebycheff ? weight_through(point) : weight_along(point);
}

WeightVector weight_along(std::span<const double> point)
{
    WeightVector w(point.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        w[i] = std::max(point[i], 0.0);
        sum += w[i];
    }
    if (!(sum > 0.0)) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }
    for (auto& v : w) { v /= sum; }
    return w;
}

WeightVector weight_through(std::span<const double> point)
{
    WeightVector w(point.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        w[i] = 1.0 / std::max(point[i], kWeightFloor);
        sum += w[i];
    }
    for (auto& v : w) { v /= sum; }
    return w;
}

bool CorrespondenceTable::same_assignment(CorrespondenceTable const& other) const
{
    return incumbents == other.incumbents;
}

CorrespondenceTable corresponding_weight_counts(std::span<const ObjectiveVector> incumbents)
{
    CorrespondenceTable t;
    t.incumbents.assign(incumbents.begin(), incumbents.end());
    t.solution_id.resize(incumbents.size());
    std::map<ObjectiveVector, std::size_t> ids;
    std::vector<std::size_t> per_solution;
    for (std::size_t i = 0; i < incumbents.size(); ++i) {
        auto [it, fresh] = ids.try_emplace(incumbents[i], per_solution.size());
        if (fresh) { per_solution.push_back(0); }
        t.solution_id[i] = it->second;
        ++per_solution[it->second];
    }
    t.counts.resize(incumbents.size());
    for (std::size_t i = 0; i < incumbents.size(); ++i) { t.counts[i] = per_solution[t.solution_id[i]]; }
    return t;
}

} // namespace atmoead
