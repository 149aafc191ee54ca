#include "atmoead/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "atmoead/kernels.hpp"

namespace atmoead {

double igd(std::span<const ObjectiveVector> solutions, std::span<const ObjectiveVector> reference)
{
    if (solutions.empty()) { throw UsageError("igd: empty solution set"); }
    if (reference.empty()) { throw UsageError("igd: empty reference set"); }
    auto const d = kernels::nearest_distances(reference, solutions);
    return std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
}

double igd(std::span<const ObjectiveVector> solutions, Problem const& problem, ReferenceFront const& reference)
{
    if (!problem.spec().scaled) { return igd(solutions, reference.points); }
    auto const s = front_normalize(solutions, problem);
    if (reference.normalized) { return igd(s, reference.points); }
    return igd(s, front_normalize(reference.points, problem));
}

std::vector<ObjectiveVector> front_normalize(std::span<const ObjectiveVector> points, Problem const& problem)
{
    return problem.front_bounds().apply(points);
}

namespace {

std::vector<ObjectiveVector> inside(std::span<const ObjectiveVector> points, std::span<const double> ref)
{
    std::vector<ObjectiveVector> out;
    for (auto const& p : points) {
        if (p.size() != ref.size()) { throw UsageError("hv: point and reference differ in length"); }
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) { ok = p[i] < ref[i]; }
        if (ok) { out.push_back(p); }
    }
    return out;
}

double hv2(std::vector<ObjectiveVector> pts, std::span<const double> ref)
{
    std::sort(pts.begin(), pts.end(), [](auto const& a, auto const& b) { return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0]; });
    double area = 0.0;
    double left = ref[0];
    for (auto const& p : pts) {
        if (p[0] < left) {
            area += (left - p[0]) * (ref[1] - p[1]);
            left = p[0];
        }
    }
    return area;
}

// Slices along the last coordinate; pts must all lie strictly inside ref.
double hv_rec(std::vector<ObjectiveVector> pts, std::span<const double> ref)
{
    std::size_t const m = ref.size();
    if (pts.empty()) { return 0.0; }
    if (m == 1) {
        double lo = ref[0];
        for (auto const& p : pts) { lo = std::min(lo, p[0]); }
        return ref[0] - lo;
    }
    if (m == 2) { return hv2(std::move(pts), ref); }

    std::sort(pts.begin(), pts.end(), [m](auto const& a, auto const& b) { return a[m - 1] < b[m - 1]; });
    auto const sub_ref = ref.first(m - 1);
    double volume = 0.0;
    std::vector<ObjectiveVector> slice;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        ObjectiveVector proj(pts[k].begin(), pts[k].end() - 1);
        bool dominated = false;
        for (auto const& q : slice) {
            dominated = std::equal(q.begin(), q.end(), proj.begin(), [](double a, double b) { return a <= b; });
            if (dominated) { break; }
        }
        if (!dominated) {
            std::erase_if(slice, [&](auto const& q) {
                return std::equal(proj.begin(), proj.end(), q.begin(), [](double a, double b) { return a <= b; });
            });
            slice.push_back(std::move(proj));
        }
        double const top = k + 1 < pts.size() ? pts[k + 1][m - 1] : ref[m - 1];
        double const height = top - pts[k][m - 1];
        if (height > 0.0) { volume += height * hv_rec(slice, sub_ref); }
    }
    return volume;
}

} // namespace

double hv_exact(std::span<const ObjectiveVector> points, std::span<const double> ref)
{
    if (ref.empty()) { throw UsageError("hv: empty reference point"); }
    return hv_rec(inside(points, ref), ref);
}

HvResult hv_monte_carlo(std::span<const ObjectiveVector> points, std::span<const double> ref, std::uint64_t samples,
                        std::uint64_t seed)
{
    if (samples == 0) { throw UsageError("hv: zero samples"); }
    HvResult out{0.0, false, samples, 0.0};
    auto const pts = inside(points, ref);
    if (pts.empty()) { return out; }
    auto lower = pts.front();
    for (auto const& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) { lower[i] = std::min(lower[i], p[i]); }
    }
    double box = 1.0;
    for (std::size_t i = 0; i < ref.size(); ++i) { box *= ref[i] - lower[i]; }
    auto const hits = kernels::dominated_samples(pts, lower, ref, samples, seed);
    double const frac = static_cast<double>(hits) / static_cast<double>(samples);
    out.value = box * frac;
    out.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return out;
}

HvResult hv(std::span<const ObjectiveVector> points, std::span<const double> ref)
{
    if (ref.size() <= kExactHvMaxObjectives) { return {hv_exact(points, ref), true, 0, 0.0}; }
    return hv_monte_carlo(points, ref);
}

} // namespace atmoead
