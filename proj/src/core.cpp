#include "atmoead/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace atmoead {

bool dominates(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw UsageError("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) { return false; }
        if (a[i] < b[i]) { strictly_better = true; }
    }
    return strictly_better;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjectiveVector> points)
{
    std::vector<std::size_t> kept;
    kept.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = j != i && dominates(points[j], points[i]);
        }
        if (!dominated) { kept.push_back(i); }
    }
    return kept;
}

std::vector<Solution> nondominated_filter(std::span<const Solution> set)
{
    auto const objs = objectives_of(set);
    std::vector<Solution> out;
    for (auto i : nondominated_indices(objs)) { out.push_back(set[i]); }
    return out;
}

ObjectiveBounds ObjectiveBounds::of(std::span<const ObjectiveVector> points)
{
    if (points.empty()) { throw UsageError("bounds of an empty point set"); }
    ObjectiveBounds b{points.front(), points.front()};
    for (auto const& p : points) {
        if (p.size() != b.lower.size()) { throw UsageError("bounds: ragged point set"); }
        for (std::size_t i = 0; i < p.size(); ++i) {
            b.lower[i] = std::min(b.lower[i], p[i]);
            b.upper[i] = std::max(b.upper[i], p[i]);
        }
    }
    return b;
}

ObjectiveBounds ObjectiveBounds::of(std::span<const Solution> solutions)
{
    return of(objectives_of(solutions));
}

double ObjectiveBounds::scale(std::size_t i) const
{
    double const range = upper[i] - lower[i];
    return range < kDegenerateAxisTolerance ? 1.0 : range;
}

ObjectiveVector ObjectiveBounds::apply(std::span<const double> p) const
{
    ObjectiveVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) { out[i] = (p[i] - lower[i]) / scale(i); }
    return out;
}

std::vector<ObjectiveVector> ObjectiveBounds::apply(std::span<const ObjectiveVector> points) const
{
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (auto const& p : points) { out.push_back(apply(p)); }
    return out;
}

std::pair<NormalizedSet, NormalizedSet> normalize(std::span<const Solution> population,
                                                  std::span<const Solution> archive)
{
    if (archive.empty()) { throw UsageError("normalize: archive must be non-empty"); }
    auto const bounds = ObjectiveBounds::of(archive);
    NormalizedSet p{bounds.apply(objectives_of(population)), bounds.lower, bounds.upper};
    NormalizedSet a{bounds.apply(objectives_of(archive)), bounds.lower, bounds.upper};
    return {std::move(p), std::move(a)};
}

double squared_distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double const d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(std::span<const double> a, std::span<const double> b)
{
    return std::sqrt(squared_distance(a, b));
}

std::vector<ObjectiveVector> objectives_of(std::span<const Solution> solutions)
{
    std::vector<ObjectiveVector> out;
    out.reserve(solutions.size());
    for (auto const& s : solutions) { out.push_back(s.objectives); }
    return out;
}

double median(std::vector<double> values)
{
    if (values.empty()) { throw UsageError("median of an empty sample"); }
    std::sort(values.begin(), values.end());
    auto const n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string format_vector(std::span<const double> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) { os << (i ? ", " : "") << v[i]; }
    os << ')';
    return os.str();
}

} // namespace atmoead
