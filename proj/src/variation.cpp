#include "atmoead/variation.hpp"

#include <algorithm>
#include <cmath>

namespace atmoead {

VariationParams VariationParams::for_dimension(std::size_t d)
{
    if (d == 0) { throw UsageError("variation: zero-dimensional decision space"); }
    VariationParams p;
    p.pm = 1.0 / static_cast<double>(d);
    return p;
}

void VariationParams::validate() const
{
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!unit(pc) || !unit(pm) || !unit(per_variable)) { throw ConfigError("variation: probability outside [0,1]"); }
    if (!(eta_c > 0.0) || !(eta_m > 0.0)) { throw ConfigError("variation: distribution index must be positive"); }
}

std::size_t RandomSource::below(std::size_t n)
{
    if (n == 0) { throw UsageError("RandomSource::below(0)"); }
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

namespace {

void check_parents(std::span<const double> p1, std::span<const double> p2, Bounds bounds)
{
    if (p1.size() != p2.size() || p1.size() != bounds.lower.size() || p1.size() != bounds.upper.size()) {
        throw UsageError("variation: length mismatch");
    }
}

} // namespace

ChildPair sbx_unclipped(std::span<const double> p1, std::span<const double> p2, VariationParams const& params,
                        Bounds bounds, RandomSource& rng)
{
    check_parents(p1, p2, bounds);
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (!(rng.uniform() < params.pc)) { return {std::move(c1), std::move(c2)}; }

    double const e = 1.0 / (params.eta_c + 1.0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        double const mu = rng.uniform();
        double beta = mu <= 0.5 ? std::pow(2.0 * mu, e) : std::pow(2.0 - 2.0 * mu, -e);
        if (rng.uniform() < 0.5) { beta = -beta; }
        if (!(rng.uniform() < params.per_variable)) { continue; }
        double const mid = 0.5 * (p1[i] + p2[i]);
        double const half = 0.5 * (p1[i] - p2[i]);
        c1[i] = mid + beta * half;
        c2[i] = mid - beta * half;
    }
    return {std::move(c1), std::move(c2)};
}

ChildPair sbx(std::span<const double> p1, std::span<const double> p2, VariationParams const& params, Bounds bounds,
              RandomSource& rng)
{
    auto children = sbx_unclipped(p1, p2, params, bounds, rng);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        children.first[i] = std::clamp(children.first[i], bounds.lower[i], bounds.upper[i]);
        children.second[i] = std::clamp(children.second[i], bounds.lower[i], bounds.upper[i]);
    }
    return children;
}

DecisionVector polynomial_mutation(std::span<const double> x, VariationParams const& params, Bounds bounds,
                                   RandomSource& rng)
{
    check_parents(x, x, bounds);
    DecisionVector y(x.begin(), x.end());
    double const e = params.eta_m + 1.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(rng.uniform() < params.pm)) { continue; }
        double const lo = bounds.lower[i];
        double const hi = bounds.upper[i];
        double const range = hi - lo;
        if (!(range > 0.0)) { continue; }
        double const mu = rng.uniform();
        double delta = 0.0;
        if (mu < 0.5) {
            double const xy = 1.0 - (y[i] - lo) / range;
            delta = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(xy, e), 1.0 / e) - 1.0;
        } else {
            double const xy = 1.0 - (hi - y[i]) / range;
            delta = 1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(xy, e), 1.0 / e);
        }
        y[i] = std::clamp(y[i] + delta * range, lo, hi);
    }
    return y;
}

} // namespace atmoead
