#include "fronts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "atmoead/decomposition.hpp"

namespace atmoead::fronts {

std::vector<ObjectiveVector> simplex_points(std::size_t m, std::size_t n)
{
    std::size_t h = 1;
    while (binomial(h + m - 1, m - 1) < n) { ++h; }
    return simplex_lattice(m, h);
}

std::vector<ObjectiveVector> sphere_points(std::size_t m, std::size_t n)
{
    auto pts = simplex_points(m, n);
    for (auto& p : pts) {
        double const norm = std::sqrt(std::inner_product(p.begin(), p.end(), p.begin(), 0.0));
        for (auto& v : p) { v /= norm; }
    }
    return pts;
}

std::vector<ObjectiveVector> sample_curve(Curve const& curve, double t0, double t1, std::size_t n,
                                          bool filter)
{
    std::size_t const grid = std::max<std::size_t>(200001, 20 * n);
    std::vector<double> t(grid);
    std::vector<ObjectiveVector> f(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        t[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(grid - 1);
        f[k] = curve(t[k]);
    }

    std::vector<bool> kept(grid, true);
    if (filter) {
        std::vector<std::size_t> order(grid);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return f[a][0] != f[b][0] ? f[a][0] < f[b][0] : f[a][1] < f[b][1];
        });
        double best = std::numeric_limits<double>::infinity();
        for (auto k : order) {
            kept[k] = f[k][1] < best;
            if (kept[k]) { best = f[k][1]; }
        }
    }

    // Maximal runs of consecutive kept grid points, with their arc lengths.
    struct Run {
        std::size_t begin;
        std::size_t end; // inclusive
        double length;
    };
    std::vector<Run> runs;
    for (std::size_t k = 0; k < grid; ++k) {
        if (!kept[k]) { continue; }
        if (!runs.empty() && runs.back().end + 1 == k) {
            runs.back().length += distance(f[k - 1], f[k]);
            runs.back().end = k;
        } else {
            runs.push_back({k, k, 0.0});
        }
    }
    std::erase_if(runs, [](Run const& r) { return r.length <= 0.0; });
    double const total = std::accumulate(runs.begin(), runs.end(), 0.0,
                                         [](double acc, Run const& r) { return acc + r.length; });

    std::vector<ObjectiveVector> out;
    out.reserve(n + runs.size());
    for (auto const& r : runs) {
        auto const count = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(
                                                         static_cast<double>(n) * r.length / total)));
        // Cumulative arc length along the run, then invert at evenly spaced targets.
        std::vector<double> cum{0.0};
        for (std::size_t k = r.begin + 1; k <= r.end; ++k) { cum.push_back(cum.back() + distance(f[k - 1], f[k])); }
        for (std::size_t j = 0; j < count; ++j) {
            double const target = r.length * static_cast<double>(j) / static_cast<double>(count - 1);
            auto it = std::lower_bound(cum.begin(), cum.end(), target);
            auto idx = static_cast<std::size_t>(std::distance(cum.begin(), it));
            if (idx == 0) {
                out.push_back(f[r.begin]);
                continue;
            }
            if (idx >= cum.size()) { idx = cum.size() - 1; }
            double const seg = cum[idx] - cum[idx - 1];
            double const frac = seg > 0.0 ? (target - cum[idx - 1]) / seg : 0.0;
            double const ta = t[r.begin + idx - 1];
            double const tb = t[r.begin + idx];
            out.push_back(curve(ta + frac * (tb - ta)));
        }
    }
    return out;
}

std::vector<Interval> record_intervals(std::function<double(double)> const& phi, std::size_t grid)
{
    std::vector<Interval> out;
    double best = -std::numeric_limits<double>::infinity();
    bool open = false;
    for (std::size_t k = 0; k < grid; ++k) {
        double const x = static_cast<double>(k) / static_cast<double>(grid - 1);
        double const v = phi(x);
        bool const record = v > best;
        if (record) {
            best = v;
            if (!open) { out.push_back({x, x}); }
            out.back().hi = x;
        }
        open = record;
    }
    std::erase_if(out, [](Interval const& i) { return i.hi <= i.lo; });
    return out;
}

std::vector<double> spread_over(std::vector<Interval> const& intervals, std::size_t count)
{
    double const total = std::accumulate(intervals.begin(), intervals.end(), 0.0,
                                         [](double acc, Interval const& i) { return acc + (i.hi - i.lo); });
    std::vector<double> out;
    for (auto const& iv : intervals) {
        auto const c = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::llround(static_cast<double>(count) * (iv.hi - iv.lo) / total)));
        for (std::size_t j = 0; j < c; ++j) {
            out.push_back(iv.lo + (iv.hi - iv.lo) * static_cast<double>(j) / static_cast<double>(c - 1));
        }
    }
    return out;
}

} // namespace atmoead::fronts
