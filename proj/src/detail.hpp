#pragma once

// Internal numeric helpers shared by the library sources. Not installed.

#include <cmath>
#include <functional>
#include <vector>

#include "hedgehog/geometry.hpp"
#include "hedgehog/trig_poly.hpp"

namespace hedgehog::detail {

inline int uniform_grid_size(int degree) {
    const int n = 64 * degree;
    return n < 4096 ? 4096 : n;
}

/// Values (and optionally first derivatives) of f on the uniform grid
/// s_i = 2 pi i / n, i = 0..n-1, via per-harmonic incremental rotation.
/// Drift over the grid is O(n * eps) in phase, far below the tolerances the
/// gridded consumers certify against.
struct GridEval {
    std::vector<double> value;
    std::vector<double> deriv;
};

inline GridEval evaluate_grid(const TrigPoly& f, int n, bool with_derivative) {
    GridEval out;
    out.value.assign(n, f.constant());
    if (with_derivative) out.deriv.assign(n, 0.0);
    for (const Harmonic& h : f.harmonics()) {
        const double step = kTwoPi * h.n / n;
        const double cs = std::cos(step), sn = std::sin(step);
        double c = 1.0, s = 0.0;  // cos/sin of h.n * s_i
        for (int i = 0; i < n; ++i) {
            out.value[i] += h.a * c + h.b * s;
            if (with_derivative) out.deriv[i] += h.n * (h.b * c - h.a * s);
            const double cn = c * cs - s * sn;
            s = s * cs + c * sn;
            c = cn;
        }
    }
    return out;
}

/// Golden-section maximization of f on [a, b]; returns the located abscissa.
/// Assumes a single interior maximum in the bracket (callers bracket first).
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double x_tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

inline double golden_min(const std::function<double(double)>& f, double a, double b,
                         double x_tol) {
    return golden_max([&f](double s) { return -f(s); }, a, b, x_tol);
}

/// Global extrema of f over one period, located from the uniform grid and
/// polished by golden section on the bracketing cells.
struct Extrema {
    double min_value;
    double max_value;
};

inline Extrema extrema(const TrigPoly& f) {
    const int n = uniform_grid_size(f.degree());
    const GridEval grid = evaluate_grid(f, n, false);
    int arg_min = 0, arg_max = 0;
    for (int i = 1; i < n; ++i) {
        if (grid.value[i] < grid.value[arg_min]) arg_min = i;
        if (grid.value[i] > grid.value[arg_max]) arg_max = i;
    }
    const double h = kTwoPi / n;
    auto eval = [&f](double s) { return f.evaluate(s); };
    const double s_min =
        golden_min(eval, (arg_min - 1) * h, (arg_min + 1) * h, 1e-12);
    const double s_max =
        golden_max(eval, (arg_max - 1) * h, (arg_max + 1) * h, 1e-12);
    return {std::min(f.evaluate(s_min), grid.value[arg_min]),
            std::max(f.evaluate(s_max), grid.value[arg_max])};
}

inline double wrap_angle(double s) {
    s = std::fmod(s, kTwoPi);
    return s < 0 ? s + kTwoPi : s;
}

}  // namespace hedgehog::detail
