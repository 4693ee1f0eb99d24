#pragma once

// Nelder-Mead downhill simplex for small, cheap, derivative-free problems.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

namespace riskframe {

struct SimplexOptions {
    double x_tol = 1e-4;         ///< stop when every vertex is this close to the best (inf-norm)
    double f_tol = 1e-8;         ///< ... and the function spread is below this
    int max_evaluations = 4000;
    double initial_step = 0.1;   ///< offset of the initial vertices along each axis
};

template <std::size_t N>
struct SimplexResult {
    std::array<double, N> x{};
    double f = std::numeric_limits<double>::infinity();
    int evaluations = 0;
    bool converged = false;
};

/// Minimizes f starting from a right-angled simplex at x0. Non-finite
/// function values are treated as +infinity.
template <std::size_t N, class F>
SimplexResult<N> nelder_mead(F&& f, const std::array<double, N>& x0, const SimplexOptions& opt = {}) {
    using Point = std::array<double, N>;
    constexpr double reflect = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;

    SimplexResult<N> out;
    auto eval = [&](const Point& p) {
        ++out.evaluations;
        const double v = f(p);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::array<Point, N + 1> pts{};
    std::array<double, N + 1> vals{};
    pts[0] = x0;
    for (std::size_t i = 0; i < N; ++i) {
        pts[i + 1] = x0;
        pts[i + 1][i] += opt.initial_step;
    }
    for (std::size_t i = 0; i <= N; ++i) vals[i] = eval(pts[i]);

    std::array<std::size_t, N + 1> order{};
    auto sort = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::array<Point, N + 1> p2;
        std::array<double, N + 1> v2;
        for (std::size_t i = 0; i <= N; ++i) {
            p2[i] = pts[order[i]];
            v2[i] = vals[order[i]];
        }
        pts = p2;
        vals = v2;
    };
    auto along = [](const Point& from, const Point& to, double t) {
        Point p;
        for (std::size_t i = 0; i < N; ++i) p[i] = from[i] + t * (to[i] - from[i]);
        return p;
    };

    while (true) {
        sort();
        double diameter = 0.0;
        for (std::size_t v = 1; v <= N; ++v)
            for (std::size_t i = 0; i < N; ++i)
                diameter = std::max(diameter, std::abs(pts[v][i] - pts[0][i]));
        const double spread = vals[N] - vals[0];
        if (diameter < opt.x_tol && spread < opt.f_tol) {
            out.converged = true;
            break;
        }
        if (out.evaluations >= opt.max_evaluations) break;

        Point centroid{};
        for (std::size_t v = 0; v < N; ++v)
            for (std::size_t i = 0; i < N; ++i) centroid[i] += pts[v][i] / static_cast<double>(N);

        const Point xr = along(centroid, pts[N], -reflect);
        const double fr = eval(xr);
        if (fr < vals[0]) {
            const Point xe = along(centroid, pts[N], -expand);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[N] = xe;
                vals[N] = fe;
            } else {
                pts[N] = xr;
                vals[N] = fr;
            }
        } else if (fr < vals[N - 1]) {
            pts[N] = xr;
            vals[N] = fr;
        } else {
            const bool outside = fr < vals[N];
            const Point xc = outside ? along(centroid, xr, contract) : along(centroid, pts[N], contract);
            const double fc = eval(xc);
            if (fc < (outside ? fr : vals[N])) {
                pts[N] = xc;
                vals[N] = fc;
            } else {
                for (std::size_t v = 1; v <= N; ++v) {
                    pts[v] = along(pts[0], pts[v], shrink);
                    vals[v] = eval(pts[v]);
                }
            }
        }
    }
    out.x = pts[0];
    out.f = vals[0];
    return out;
}

}  // namespace riskframe
