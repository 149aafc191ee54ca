#include "atmoead/problems.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include "fronts.hpp"

namespace atmoead {

namespace {

constexpr double kPi = std::numbers::pi;

// 100 (k + sum((x - 0.5)^2 - cos(20 pi (x - 0.5))))
double g_rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) { s += (v - 0.5) * (v - 0.5) - std::cos(20.0 * kPi * (v - 0.5)); }
    return 100.0 * (static_cast<double>(x.size()) + s);
}

double g_sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) { s += (v - 0.5) * (v - 0.5); }
    return s;
}

// Linear simplex shape: entries sum to 1.
void linear_shape(std::span<const double> pos, std::span<double> f)
{
    std::size_t const m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j + 1 + i < m; ++j) { v *= pos[j]; }
        if (i > 0) { v *= 1.0 - pos[m - 1 - i]; }
        f[i] = v;
    }
}

// Spherical shape: squares of entries sum to 1. pos in [0,1] maps to angles.
void sphere_shape(std::span<const double> pos, std::span<double> f)
{
    std::size_t const m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j + 1 + i < m; ++j) { v *= std::cos(pos[j] * kPi / 2.0); }
        if (i > 0) { v *= std::sin(pos[m - 1 - i] * kPi / 2.0); }
        f[i] = v;
    }
}

std::vector<double> filled(std::size_t n, double v)
{
    return std::vector<double>(n, v);
}

std::vector<double> geometric(std::size_t n, double first, double ratio)
{
    std::vector<double> out(n);
    double v = first;
    for (auto& o : out) {
        o = v;
        v *= ratio;
    }
    return out;
}

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

ProblemSpec box(std::string name, std::size_t m, std::size_t d, double lo, double hi, FrontKind kind,
                bool scaled = false)
{
    return {std::move(name), m, d, filled(d, lo), filled(d, hi), kind, scaled};
}

double dtlz7_phi(double t)
{
    return t * (1.0 + std::sin(3.0 * kPi * t));
}

std::vector<ObjectiveVector> dtlz7_front(std::size_t m, std::size_t n)
{
    auto const intervals = fronts::record_intervals(dtlz7_phi, 200001);
    auto const per_axis = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(m - 1))));
    auto const values = fronts::spread_over(intervals, per_axis);
    std::vector<ObjectiveVector> out;
    std::vector<std::size_t> idx(m - 1, 0);
    while (true) {
        ObjectiveVector f(m);
        double h = static_cast<double>(m);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            f[i] = values[idx[i]];
            h -= dtlz7_phi(f[i]) / 2.0;
        }
        f[m - 1] = 2.0 * h;
        out.push_back(std::move(f));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == values.size()) { idx[k++] = 0; }
        if (k == idx.size()) { break; }
    }
    return out;
}

void dtlz7_eval(std::size_t m, std::span<const double> x, std::span<double> f)
{
    auto const tail = x.subspan(m - 1);
    double const g = 1.0 + 9.0 * std::accumulate(tail.begin(), tail.end(), 0.0) / static_cast<double>(tail.size());
    double h = static_cast<double>(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        f[i] = x[i];
        h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[i]));
    }
    f[m - 1] = (1.0 + g) * h;
}

// DTLZ5-style degenerate curve: first angle free, the rest collapse to pi/4.
std::vector<ObjectiveVector> degenerate_curve_front(std::size_t m, std::size_t n)
{
    return fronts::sample_curve(
        [m](double t) {
            std::vector<double> pos(m - 1, 0.5);
            pos[0] = t;
            ObjectiveVector f(m);
            sphere_shape(pos, f);
            return f;
        },
        0.0, 1.0, n, false);
}

void convex_transform(std::span<double> f)
{
    for (std::size_t i = 0; i + 1 < f.size(); ++i) { f[i] = std::pow(f[i], 4.0); }
    f[f.size() - 1] = f[f.size() - 1] * f[f.size() - 1];
}

std::vector<ObjectiveVector> convex_front(std::size_t m, std::size_t n)
{
    auto pts = fronts::sphere_points(m, n);
    for (auto& p : pts) { convex_transform(p); }
    return pts;
}

std::vector<ObjectiveVector> maf2_front(std::size_t n)
{
    // Sphere patch with both angles in [pi/8, 3pi/8].
    auto const lo = kPi / 8.0;
    auto const hi = 3.0 * kPi / 8.0;
    std::vector<ObjectiveVector> out;
    std::size_t dense = 4 * n;
    while (out.size() < n) {
        out.clear();
        for (auto& p : fronts::sphere_points(3, dense)) {
            double const t1 = std::asin(std::clamp(p[2], -1.0, 1.0));
            double const t2 = std::atan2(p[1], p[0]);
            if (t1 >= lo && t1 <= hi && t2 >= lo && t2 <= hi) { out.push_back(std::move(p)); }
        }
        dense *= 2;
    }
    return out;
}

// Tian et al. IMOP parameters.
constexpr std::size_t kImopK = 5;
constexpr double kImopA1 = 0.05;
constexpr double kImopA2 = 0.05;
constexpr double kImopA3 = 10.0;

double mean_of(std::span<const double> x, std::size_t start, std::size_t stop, std::size_t step)
{
    double s = 0.0;
    std::size_t c = 0;
    for (std::size_t i = start; i < stop; i += step, ++c) { s += x[i]; }
    return s / static_cast<double>(c);
}

void imop5_shape(double y1, double y2, double g, std::span<double> f)
{
    double const sector = kPi / 4.0 * std::ceil(8.0 * y1);
    double const h1 = 0.4 * std::cos(sector) + 0.1 * y2 * std::cos(16.0 * kPi * y1);
    double const h2 = 0.4 * std::sin(sector) + 0.1 * y2 * std::sin(16.0 * kPi * y1);
    f[0] = g + h1;
    f[1] = g + h2;
    f[2] = g + 0.5 - h1 - h2;
}

std::vector<ObjectiveVector> imop5_front(std::size_t n)
{
    // Eight discs of radius 0.1 around 0.4 (cos k pi/4, sin k pi/4) on the plane sum = 0.5.
    double const step = std::sqrt(8.0 * kPi * 0.01 / static_cast<double>(n));
    auto const reach = static_cast<int>(std::ceil(0.1 / step));
    std::vector<ObjectiveVector> out;
    for (int k = 1; k <= 8; ++k) {
        double const cx = 0.4 * std::cos(k * kPi / 4.0);
        double const cy = 0.4 * std::sin(k * kPi / 4.0);
        for (int i = -reach; i <= reach; ++i) {
            for (int j = -reach; j <= reach; ++j) {
                double const dx = i * step;
                double const dy = j * step;
                if (dx * dx + dy * dy > 0.01) { continue; }
                out.push_back({cx + dx, cy + dy, 0.5 - (cx + dx) - (cy + dy)});
            }
        }
    }
    return out;
}

double imop6_ridge(double y1, double y2)
{
    double const a = std::sin(3.0 * kPi * y1);
    double const b = std::sin(3.0 * kPi * y2);
    return std::max(0.0, std::min(a * a, b * b) - 0.05);
}

std::vector<ObjectiveVector> imop6_front(std::size_t n)
{
    // Only the r = 0 strips are non-dominated; they lie on f3 = 1 - (f1 + f2)/2.
    auto grid = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n) / 0.26)));
    std::vector<ObjectiveVector> out;
    while (out.size() < n) {
        out.clear();
        for (std::size_t i = 0; i < grid; ++i) {
            for (std::size_t j = 0; j < grid; ++j) {
                double const y1 = static_cast<double>(i) / static_cast<double>(grid - 1);
                double const y2 = static_cast<double>(j) / static_cast<double>(grid - 1);
                if (imop6_ridge(y1, y2) > 0.0) { continue; }
                out.push_back({y1, y2, 1.0 - 0.5 * (y1 + y2)});
            }
        }
        grid += grid / 10 + 1;
    }
    return out;
}

void vnt2_eval(std::span<const double> x, std::span<double> f)
{
    double const a = x[0];
    double const b = x[1];
    f[0] = (a - 2.0) * (a - 2.0) / 2.0 + (b + 1.0) * (b + 1.0) / 13.0 + 3.0;
    f[1] = (a + b - 3.0) * (a + b - 3.0) / 36.0 + (-a + b + 2.0) * (-a + b + 2.0) / 8.0 - 17.0;
    f[2] = (a + 2.0 * b - 1.0) * (a + 2.0 * b - 1.0) / 175.0 + (2.0 * b - a) * (2.0 * b - a) / 17.0 - 13.0;
}

std::vector<ObjectiveVector> vnt2_front(std::size_t n)
{
    // All three objectives are strictly convex quadratics, so the Pareto set is
    // exactly the set of minimizers of their convex combinations; the gradient
    // of objective k is H_k x - b_k.
    using M2 = std::array<double, 4>;
    using V2 = std::array<double, 2>;
    std::array<M2, 3> const hess{
        M2{1.0, 0.0, 0.0, 2.0 / 13.0},
        M2{1.0 / 18.0 + 0.25, 1.0 / 18.0 - 0.25, 1.0 / 18.0 - 0.25, 1.0 / 18.0 + 0.25},
        M2{2.0 / 175.0 + 2.0 / 17.0, 4.0 / 175.0 - 4.0 / 17.0, 4.0 / 175.0 - 4.0 / 17.0, 8.0 / 175.0 + 8.0 / 17.0}};
    std::array<V2, 3> const rhs{V2{2.0, -2.0 / 13.0}, V2{2.0 / 3.0, -1.0 / 3.0}, V2{2.0 / 175.0, 4.0 / 175.0}};

    std::vector<ObjectiveVector> out;
    for (auto const& lambda : fronts::simplex_points(3, n)) {
        M2 h{};
        V2 b{};
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t e = 0; e < 4; ++e) { h[e] += lambda[k] * hess[k][e]; }
            for (std::size_t e = 0; e < 2; ++e) { b[e] += lambda[k] * rhs[k][e]; }
        }
        double const det = h[0] * h[3] - h[1] * h[2];
        std::array<double, 2> x{(h[3] * b[0] - h[1] * b[1]) / det, (h[0] * b[1] - h[2] * b[0]) / det};
        x[0] = std::clamp(x[0], -4.0, 4.0);
        x[1] = std::clamp(x[1], -4.0, 4.0);
        ObjectiveVector f(3);
        vnt2_eval(x, f);
        out.push_back(std::move(f));
    }
    return out;
}

using Shape = std::function<ObjectiveVector(double)>;

std::shared_ptr<const Problem> make(ProblemSpec spec, Problem::Objective obj, Problem::FrontSampler front,
                                    std::vector<double> ref)
{
    return std::make_shared<const Problem>(std::move(spec), std::move(obj), std::move(front), std::move(ref));
}

void require_objectives(std::string const& name, std::size_t m, std::size_t min_m, std::size_t max_m)
{
    if (m < min_m || m > max_m) {
        throw ConfigError("problem " + name + " does not support " + std::to_string(m) + " objectives");
    }
}

std::shared_ptr<const Problem> build(std::string const& key, std::size_t m)
{
    constexpr std::size_t kAny = 64;

    if (key == "DTLZ1" || key == "SDTLZ1" || key == "IDTLZ1") {
        require_objectives(key, m, 2, kAny);
        bool const scaled = key == "SDTLZ1";
        bool const inverted = key == "IDTLZ1";
        auto const factor = geometric(m, 1.0, scaled ? 10.0 : 1.0);
        auto obj = [m, factor, inverted](std::span<const double> x, std::span<double> f) {
            double const g = g_rastrigin(x.subspan(m - 1));
            linear_shape(x.first(m - 1), f);
            for (std::size_t i = 0; i < m; ++i) {
                double const v = inverted ? 1.0 - f[i] : f[i];
                f[i] = 0.5 * (1.0 + g) * v * factor[i];
            }
        };
        auto front = [m, factor, inverted](std::size_t n) {
            auto pts = fronts::simplex_points(m, n);
            for (auto& p : pts) {
                for (std::size_t i = 0; i < m; ++i) { p[i] = 0.5 * (inverted ? 1.0 - p[i] : p[i]) * factor[i]; }
            }
            return pts;
        };
        auto ref = scaled ? geometric(m, 0.55, 10.0) : filled(m, 1.0);
        auto kind = scaled ? FrontKind::scaled : inverted ? FrontKind::inverted : FrontKind::regular;
        return make(box(key, m, m + 4, 0.0, 1.0, kind, scaled), obj, front, ref);
    }

    if (key == "DTLZ2" || key == "DTLZ4" || key == "SDTLZ2" || key == "IDTLZ2" || key == "CDTLZ2") {
        require_objectives(key, m, 2, kAny);
        bool const biased = key == "DTLZ4";
        bool const scaled = key == "SDTLZ2";
        bool const inverted = key == "IDTLZ2";
        bool const convex = key == "CDTLZ2";
        auto const factor = geometric(m, 1.0, scaled ? 10.0 : 1.0);
        auto obj = [=](std::span<const double> x, std::span<double> f) {
            double const g = g_sphere(x.subspan(m - 1));
            std::vector<double> pos(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m - 1));
            if (biased) {
                for (auto& p : pos) { p = std::pow(p, 100.0); }
            }
            sphere_shape(pos, f);
            for (std::size_t i = 0; i < m; ++i) { f[i] = (1.0 + g) * (inverted ? 1.0 - f[i] : f[i]) * factor[i]; }
            if (convex) { convex_transform(f); }
        };
        auto front = [=](std::size_t n) {
            auto pts = fronts::sphere_points(m, n);
            for (auto& p : pts) {
                for (std::size_t i = 0; i < m; ++i) { p[i] = (inverted ? 1.0 - p[i] : p[i]) * factor[i]; }
                if (convex) { convex_transform(p); }
            }
            return pts;
        };
        auto ref = scaled ? geometric(m, 1.1, 10.0) : filled(m, 2.0);
        auto kind = scaled     ? FrontKind::scaled
                    : inverted ? FrontKind::inverted
                    : convex   ? FrontKind::nonlinear
                               : FrontKind::regular;
        return make(box(key, m, m + 9, 0.0, 1.0, kind, scaled), obj, front, ref);
    }

    if (key == "DTLZ5") {
        require_objectives(key, m, 2, kAny);
        auto obj = [m](std::span<const double> x, std::span<double> f) {
            double const g = g_sphere(x.subspan(m - 1));
            std::vector<double> pos(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m - 1));
            for (std::size_t i = 1; i < pos.size(); ++i) { pos[i] = (1.0 + 2.0 * g * pos[i]) / (2.0 * (1.0 + g)); }
            sphere_shape(pos, f);
            for (auto& v : f) { v *= 1.0 + g; }
        };
        auto front = [m](std::size_t n) { return degenerate_curve_front(m, n); };
        return make(box(key, m, m + 9, 0.0, 1.0, FrontKind::degenerate), obj, front, filled(m, 2.0));
    }

    if (key == "DTLZ7" || key == "MAF7") {
        require_objectives(key, m, key == "MAF7" ? 3 : 2, key == "MAF7" ? 3 : kAny);
        auto ref = filled(m, 2.0);
        ref.back() = 2.0 * static_cast<double>(m) + 1.0;
        auto obj = [m](std::span<const double> x, std::span<double> f) { dtlz7_eval(m, x, f); };
        auto front = [m](std::size_t n) { return dtlz7_front(m, n); };
        return make(box(key == "MAF7" ? "MaF7" : key, m, m + 19, 0.0, 1.0, FrontKind::disconnected), obj, front,
                    ref);
    }

    if (key == "ZDT2" || key == "ZDT3" || key == "ZDT6") {
        require_objectives(key, m, 2, 2);
        std::size_t const d = key == "ZDT6" ? 10 : 30;
        auto obj = [key, d](std::span<const double> x, std::span<double> f) {
            double tail = 0.0;
            for (std::size_t i = 1; i < d; ++i) { tail += x[i]; }
            double g = 0.0;
            if (key == "ZDT6") {
                f[0] = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * kPi * x[0]), 6.0);
                g = 1.0 + 9.0 * std::pow(tail / 9.0, 0.25);
            } else {
                f[0] = x[0];
                g = 1.0 + 9.0 * tail / static_cast<double>(d - 1);
            }
            double const r = f[0] / g;
            f[1] = key == "ZDT3" ? g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f[0])) : g * (1.0 - r * r);
        };
        auto front = [obj, d](std::size_t n) {
            return fronts::sample_curve(
                [&](double t) {
                    std::vector<double> x(d, 0.0);
                    x[0] = t;
                    ObjectiveVector f(2);
                    obj(x, f);
                    return f;
                },
                0.0, 1.0, n, true);
        };
        auto kind = key == "ZDT3" ? FrontKind::disconnected : FrontKind::regular;
        return make(box(key, 2, d, 0.0, 1.0, kind), obj, front, {2.0, 2.0});
    }

    if (key == "SCH1" || key == "SCH2") {
        require_objectives(key, m, 2, 2);
        bool const second = key == "SCH2";
        auto obj = [second](std::span<const double> x, std::span<double> f) {
            double const v = x[0];
            if (second) {
                f[0] = v <= 1.0 ? -v : v <= 3.0 ? v - 2.0 : v <= 4.0 ? 4.0 - v : v - 4.0;
                f[1] = (v - 5.0) * (v - 5.0);
            } else {
                f[0] = v * v;
                f[1] = (v - 2.0) * (v - 2.0);
            }
        };
        auto front = [obj, second](std::size_t n) {
            return fronts::sample_curve(
                [&](double t) {
                    ObjectiveVector f(2);
                    obj(std::span<const double>(&t, 1), f);
                    return f;
                },
                second ? -5.0 : -1.0, second ? 10.0 : 3.0, n, true);
        };
        if (second) {
            return make(box(key, 2, 1, -5.0, 10.0, FrontKind::mixed, true), obj, front, {2.0, 17.0});
        }
        return make(box(key, 2, 1, -1000.0, 1000.0, FrontKind::nonlinear), obj, front, {5.0, 5.0});
    }

    if (key == "FON1") {
        require_objectives(key, m, 2, 2);
        auto obj = [](std::span<const double> x, std::span<double> f) {
            double const c = 1.0 / std::sqrt(static_cast<double>(x.size()));
            double a = 0.0;
            double b = 0.0;
            for (double v : x) {
                a += (v - c) * (v - c);
                b += (v + c) * (v + c);
            }
            f[0] = 1.0 - std::exp(-a);
            f[1] = 1.0 - std::exp(-b);
        };
        double const c = 1.0 / std::sqrt(3.0);
        auto front = [obj, c](std::size_t n) {
            return fronts::sample_curve(
                [&](double t) {
                    std::vector<double> x(3, t);
                    ObjectiveVector f(2);
                    obj(x, f);
                    return f;
                },
                -c, c, n, true);
        };
        return make(box(key, 2, 3, -4.0, 4.0, FrontKind::nonlinear), obj, front, {2.0, 2.0});
    }

    if (key == "VNT2") {
        require_objectives(key, m, 3, 3);
        return make(box(key, 3, 2, -4.0, 4.0, FrontKind::mixed, true), vnt2_eval, vnt2_front, {5.0, 16.0, 12.0});
    }

    if (key == "MAF1") {
        require_objectives(key, m, 3, 3);
        auto obj = [m](std::span<const double> x, std::span<double> f) {
            double const g = g_sphere(x.subspan(m - 1));
            linear_shape(x.first(m - 1), f);
            for (auto& v : f) { v = (1.0 + g) * (1.0 - v); }
        };
        auto front = [m](std::size_t n) {
            auto pts = fronts::simplex_points(m, n);
            for (auto& p : pts) {
                for (auto& v : p) { v = 1.0 - v; }
            }
            return pts;
        };
        return make(box("MaF1", m, m + 9, 0.0, 1.0, FrontKind::inverted), obj, front, filled(m, 1.0));
    }

    if (key == "MAF2") {
        require_objectives(key, m, 3, 3);
        std::size_t const d = m + 9;
        auto obj = [m, d](std::span<const double> x, std::span<double> f) {
            std::size_t const width = (d - m + 1) / m;
            std::vector<double> g(m, 0.0);
            for (std::size_t k = 0; k < m; ++k) {
                std::size_t const start = m - 1 + k * width;
                std::size_t const stop = k + 1 < m ? start + width : d;
                for (std::size_t i = start; i < stop; ++i) {
                    double const v = x[i] / 2.0 + 0.25 - 0.5;
                    g[k] += v * v;
                }
            }
            std::vector<double> pos(m - 1);
            for (std::size_t i = 0; i + 1 < m; ++i) { pos[i] = x[i] / 2.0 + 0.25; }
            sphere_shape(pos, f);
            for (std::size_t i = 0; i < m; ++i) { f[i] *= 1.0 + g[i]; }
        };
        return make(box("MaF2", m, d, 0.0, 1.0, FrontKind::nonlinear), obj, maf2_front, filled(m, 1.0));
    }

    if (key == "MAF3") {
        require_objectives(key, m, 3, 3);
        auto obj = [m](std::span<const double> x, std::span<double> f) {
            double const g = g_rastrigin(x.subspan(m - 1));
            sphere_shape(x.first(m - 1), f);
            for (auto& v : f) { v *= 1.0 + g; }
            convex_transform(f);
        };
        auto front = [m](std::size_t n) { return convex_front(m, n); };
        return make(box("MaF3", m, m + 9, 0.0, 1.0, FrontKind::nonlinear), obj, front, filled(m, 1.0));
    }

    if (key == "MAF4") {
        require_objectives(key, m, 3, 3);
        auto const factor = geometric(m, 2.0, 2.0);
        auto obj = [m, factor](std::span<const double> x, std::span<double> f) {
            double const g = g_rastrigin(x.subspan(m - 1));
            sphere_shape(x.first(m - 1), f);
            for (std::size_t i = 0; i < m; ++i) { f[i] = factor[i] * (1.0 + g) * (1.0 - f[i]); }
        };
        auto front = [m, factor](std::size_t n) {
            auto pts = fronts::sphere_points(m, n);
            for (auto& p : pts) {
                for (std::size_t i = 0; i < m; ++i) { p[i] = factor[i] * (1.0 - p[i]); }
            }
            return pts;
        };
        return make(box("MaF4", m, m + 9, 0.0, 1.0, FrontKind::mixed, true), obj, front, factor);
    }

    if (key == "MAF5") {
        require_objectives(key, m, 3, 3);
        auto factor = geometric(m, 2.0, 2.0);
        std::reverse(factor.begin(), factor.end());
        auto obj = [m, factor](std::span<const double> x, std::span<double> f) {
            double const g = g_sphere(x.subspan(m - 1));
            std::vector<double> pos(m - 1);
            for (std::size_t i = 0; i + 1 < m; ++i) { pos[i] = std::pow(x[i], 100.0); }
            sphere_shape(pos, f);
            for (std::size_t i = 0; i < m; ++i) { f[i] *= (1.0 + g) * factor[i]; }
        };
        auto front = [m, factor](std::size_t n) {
            auto pts = fronts::sphere_points(m, n);
            for (auto& p : pts) {
                for (std::size_t i = 0; i < m; ++i) { p[i] *= factor[i]; }
            }
            return pts;
        };
        return make(box("MaF5", m, m + 9, 0.0, 1.0, FrontKind::scaled, true), obj, front, factor);
    }

    if (key == "MAF6") {
        require_objectives(key, m, 3, 3);
        auto obj = [m](std::span<const double> x, std::span<double> f) {
            double const g = g_sphere(x.subspan(m - 1));
            std::vector<double> pos(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m - 1));
            for (std::size_t i = 1; i < pos.size(); ++i) { pos[i] = (1.0 + 2.0 * g * pos[i]) / (2.0 + 2.0 * g); }
            sphere_shape(pos, f);
            for (auto& v : f) { v *= 1.0 + 100.0 * g; }
        };
        auto front = [m](std::size_t n) { return degenerate_curve_front(m, n); };
        return make(box("MaF6", m, m + 9, 0.0, 1.0, FrontKind::degenerate), obj, front, {0.8, 0.8, 1.0});
    }

    if (key == "IMOP1" || key == "IMOP2" || key == "IMOP3") {
        require_objectives(key, m, 2, 2);
        int const variant = key.back() - '0';
        auto shape = [variant](double y, double g, std::span<double> f) {
            if (variant == 1) {
                f[0] = g + std::pow(std::cos(y * kPi / 2.0), 8.0);
                f[1] = g + std::pow(std::sin(y * kPi / 2.0), 8.0);
            } else if (variant == 2) {
                f[0] = g + std::sqrt(std::cos(y * kPi / 2.0));
                f[1] = g + std::sqrt(std::sin(y * kPi / 2.0));
            } else {
                f[0] = g + 1.0 + std::cos(y * kPi * 10.0) / 5.0 - y;
                f[1] = g + y;
            }
        };
        auto obj = [shape](std::span<const double> x, std::span<double> f) {
            double const y = std::pow(mean_of(x, 0, kImopK, 1), kImopA1);
            shape(y, g_sphere(x.subspan(kImopK)), f);
        };
        auto front = [shape](std::size_t n) {
            return fronts::sample_curve(
                [&](double y) {
                    ObjectiveVector f(2);
                    shape(y, 0.0, f);
                    return f;
                },
                0.0, 1.0, n, true);
        };
        auto kind = variant == 3 ? FrontKind::disconnected : FrontKind::nonlinear;
        std::vector<double> ref = variant == 3 ? std::vector<double>{1.5, 1.0} : std::vector<double>{1.0, 1.0};
        return make(box(key, 2, 10, 0.0, 1.0, kind), obj, front, ref);
    }

    if (key == "IMOP4") {
        require_objectives(key, m, 3, 3);
        auto shape = [](double y, double g, std::span<double> f) {
            f[0] = (1.0 + g) * y;
            f[1] = (1.0 + g) * (y + std::sin(10.0 * kPi * y) / 10.0);
            f[2] = (1.0 + g) * (1.0 - y);
        };
        auto obj = [shape](std::span<const double> x, std::span<double> f) {
            double const y = std::pow(mean_of(x, 0, kImopK, 1), kImopA1);
            shape(y, g_sphere(x.subspan(kImopK)), f);
        };
        auto front = [shape](std::size_t n) {
            return fronts::sample_curve(
                [&](double y) {
                    ObjectiveVector f(3);
                    shape(y, 0.0, f);
                    return f;
                },
                0.0, 1.0, n, false);
        };
        return make(box(key, 3, 10, 0.0, 1.0, FrontKind::degenerate), obj, front, {1.0, 1.0, 1.0});
    }

    if (key == "IMOP5" || key == "IMOP6") {
        require_objectives(key, m, 3, 3);
        bool const fifth = key == "IMOP5";
        auto obj = [fifth](std::span<const double> x, std::span<double> f) {
            double const y1 = std::pow(mean_of(x, 0, kImopK, 2), kImopA2);
            double const y2 = std::pow(mean_of(x, 1, kImopK, 2), kImopA3);
            double const g = g_sphere(x.subspan(kImopK));
            if (fifth) {
                imop5_shape(y1, y2, g, f);
                return;
            }
            double const lift = std::ceil(imop6_ridge(y1, y2));
            f[0] = (1.0 + g) * y1 + lift;
            f[1] = (1.0 + g) * y2 + lift;
            f[2] = (0.5 + g) * (2.0 - y1 - y2) + lift;
        };
        if (fifth) {
            return make(box(key, 3, 10, 0.0, 1.0, FrontKind::disconnected), obj, imop5_front, {1.0, 1.0, 1.0});
        }
        return make(box(key, 3, 10, 0.0, 1.0, FrontKind::mixed), obj, imop6_front, {0.5, 0.5, 1.5});
    }

    throw ConfigError("unknown problem: " + key);
}

} // namespace

std::string_view to_string(FrontKind kind)
{
    switch (kind) {
    case FrontKind::regular: return "regular";
    case FrontKind::inverted: return "inverted";
    case FrontKind::nonlinear: return "nonlinear";
    case FrontKind::disconnected: return "disconnected";
    case FrontKind::degenerate: return "degenerate";
    case FrontKind::scaled: return "scaled";
    case FrontKind::mixed: return "mixed";
    }
    return "unknown";
}

struct Problem::Cache {
    std::once_flag once;
    ObjectiveBounds bounds;
};

Problem::Problem(ProblemSpec spec, Objective objective, FrontSampler front, std::vector<double> hv_reference)
    : spec_(std::move(spec))
    , objective_(std::move(objective))
    , front_(std::move(front))
    , hv_reference_(std::move(hv_reference))
    , cache_(std::make_shared<Cache>())
{
}

ObjectiveVector Problem::evaluate(std::span<const double> x) const
{
    if (x.size() != spec_.variables) {
        throw UsageError(spec_.name + ": expected " + std::to_string(spec_.variables) + " variables, got " +
                         std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= spec_.lower[i] && x[i] <= spec_.upper[i])) {
            throw UsageError(spec_.name + ": variable " + std::to_string(i) + " out of bounds");
        }
    }
    ObjectiveVector f(spec_.objectives);
    objective_(x, f);
    return f;
}

std::vector<ObjectiveVector> Problem::sample_front(std::size_t n) const
{
    if (n < spec_.objectives) { throw UsageError("front sample size must be at least M"); }
    return front_(n);
}

ObjectiveBounds const& Problem::front_bounds() const
{
    std::call_once(cache_->once, [this] {
        cache_->bounds = ObjectiveBounds::of(sample_front(default_reference_size(spec_.objectives)));
    });
    return cache_->bounds;
}

std::shared_ptr<const Problem> make_problem(std::string_view name, std::size_t objectives)
{
    return build(upper(name), objectives);
}

std::vector<std::string> problem_names()
{
    return {"DTLZ1", "DTLZ2", "DTLZ4", "DTLZ5", "DTLZ7", "IDTLZ1", "IDTLZ2", "CDTLZ2", "SDTLZ1", "SDTLZ2",
            "ZDT2",  "ZDT3",  "ZDT6",  "SCH1",  "SCH2",  "FON1",   "VNT2",   "MaF1",   "MaF2",   "MaF3",
            "MaF4",  "MaF5",  "MaF6",  "MaF7",  "IMOP1", "IMOP2",  "IMOP3",  "IMOP4",  "IMOP5",  "IMOP6"};
}

std::vector<std::pair<std::string, std::size_t>> benchmark_instances()
{
    return {{"DTLZ1", 2},  {"DTLZ2", 2}, {"DTLZ4", 2}, {"DTLZ1", 3},  {"DTLZ2", 3},  {"DTLZ4", 3},
            {"DTLZ1", 5},  {"DTLZ2", 5}, {"ZDT2", 2},  {"ZDT6", 2},   {"DTLZ5", 3},  {"DTLZ7", 3},
            {"CDTLZ2", 3}, {"IDTLZ1", 3}, {"IDTLZ2", 3}, {"ZDT3", 2},  {"FON1", 2},   {"SCH1", 2},
            {"SCH2", 2},   {"SDTLZ1", 3}, {"SDTLZ2", 3}, {"VNT2", 3},  {"IDTLZ1", 10}, {"MaF1", 3},
            {"MaF2", 3},   {"MaF3", 3},  {"MaF4", 3},  {"MaF5", 3},   {"MaF6", 3},   {"MaF7", 3},
            {"IMOP1", 2},  {"IMOP2", 2}, {"IMOP3", 2}, {"IMOP4", 3},  {"IMOP5", 3},  {"IMOP6", 3}};
}

std::size_t default_reference_size(std::size_t objectives)
{
    if (objectives <= 3) { return 10000; }
    if (objectives <= 5) { return 5000; }
    return 1000;
}

ReferenceFront pareto_front_sample(Problem const& problem, std::size_t n, bool normalized)
{
    ReferenceFront rf{problem.sample_front(n), normalized};
    if (normalized) { rf.points = problem.front_bounds().apply(rf.points); }
    return rf;
}

} // namespace atmoead
