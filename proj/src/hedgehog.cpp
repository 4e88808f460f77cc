#include "hedgehog/hedgehog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "hedgehog/errors.hpp"

namespace hedgehog {

namespace {

TrigPoly curvature_radius_poly(const TrigPoly& h) {
    std::vector<Harmonic> terms;
    terms.reserve(h.harmonics().size());
    for (const Harmonic& t : h.harmonics()) {
        const double f = 1.0 - double(t.n) * t.n;
        terms.push_back({t.n, f * t.a, f * t.b});
    }
    return TrigPoly(h.constant(), std::move(terms));
}

}  // namespace

Hedgehog::Hedgehog(TrigPoly support)
    : support_(std::move(support)), rho_(curvature_radius_poly(support_)) {}

Point2 Hedgehog::point_at(double s) const {
    const double h = support_.evaluate(s);
    const double dh = support_.evaluate(s, 1);
    return h * unit_dir(s) + dh * unit_normal_rot(s);
}

Point2 Hedgehog::perp_point_at(double s) const {
    return perp(point_at(s));
}

Hedgehog Hedgehog::rotated(double alpha) const {
    return Hedgehog(support_.phase_shift(-alpha));
}

double Hedgehog::width(double s) const {
    return support_.evaluate(s) + support_.evaluate(s + kPi);
}

double Hedgehog::average_width() const { return 2.0 * support_.constant(); }

Point2 Hedgehog::steiner_point() const {
    auto [a1, b1] = support_.coefficient(1);
    return {a1, b1};
}

SteinerDisk Hedgehog::steiner_disk() const {
    return {steiner_point(), std::abs(support_.constant())};
}

double Hedgehog::algebraic_length() const { return kTwoPi * support_.constant(); }

double Hedgehog::oriented_area() const {
    const double a0 = support_.constant();
    double sum = 0.0;
    for (const Harmonic& t : support_.harmonics())
        sum += (double(t.n) * t.n - 1.0) * (t.a * t.a + t.b * t.b);
    return kPi * a0 * a0 - 0.5 * kPi * sum;
}

double Hedgehog::radius_of_curvature(double s) const { return rho_.evaluate(s); }

Convexity Hedgehog::convexity(double tol) const {
    const auto [lo, hi] = detail::extrema(rho_);
    if (lo > tol || hi < -tol) return Convexity::convex;
    if (lo < -tol && hi > tol) return Convexity::nonconvex;
    return Convexity::marginal;
}

bool Hedgehog::is_convex(double tol) const {
    return convexity(tol) == Convexity::convex;
}

namespace {

constexpr double kTangentialTol = 1e-9;

double bisect_root(const TrigPoly& rho, double a, double b, double fa) {
    for (int iter = 0; iter < 200 && b - a > 1e-13; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = rho.evaluate(mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    if (b - a > 1e-12)
        throw NumericalError("root refinement failed to converge on bracket [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
    return 0.5 * (a + b);
}

}  // namespace

std::vector<SingularPoint> Hedgehog::singular_points() const {
    std::vector<SingularPoint> out;
    if (rho_.is_zero()) return out;  // degenerate point curve

    const int n = detail::uniform_grid_size(rho_.degree());
    const double step = kTwoPi / n;
    const detail::GridEval grid = detail::evaluate_grid(rho_, n, false);

    auto value_at = [](int i, const detail::GridEval& g, int count) {
        return g.value[((i % count) + count) % count];
    };

    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const double v0 = grid.value[i];
        const double v1 = value_at(i + 1, grid, n);
        if (v0 == 0.0) {
            roots.push_back(i * step);
        } else if (v1 != 0.0 && (v0 < 0.0) != (v1 < 0.0)) {
            double s = bisect_root(rho_, i * step, (i + 1) * step, v0);
            const double d = rho_.evaluate(s, 1);
            if (d != 0.0) {
                const double polished = s - rho_.evaluate(s) / d;
                if (std::abs(polished - s) < step) s = polished;
            }
            roots.push_back(detail::wrap_angle(s));
        }
    }

    // Tangential (even-order) zeros: grid minima of |rho| with no adjacent
    // sign change, refined by golden section before testing the threshold.
    for (int i = 0; i < n; ++i) {
        const double v_prev = value_at(i - 1, grid, n);
        const double v0 = grid.value[i];
        const double v_next = value_at(i + 1, grid, n);
        if (v0 == 0.0) continue;  // already collected
        const bool same_sign = (v_prev < 0.0) == (v0 < 0.0) && (v0 < 0.0) == (v_next < 0.0);
        if (!same_sign) continue;
        if (std::abs(v0) > std::abs(v_prev) || std::abs(v0) > std::abs(v_next)) continue;
        const double s = detail::golden_min(
            [this](double t) { return std::abs(rho_.evaluate(t)); },
            (i - 1) * step, (i + 1) * step, 1e-12);
        if (std::abs(rho_.evaluate(s)) < kTangentialTol) roots.push_back(detail::wrap_angle(s));
    }

    std::sort(roots.begin(), roots.end());
    const double merge_tol = 1e-8;
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (!unique_roots.empty() && r - unique_roots.back() < merge_tol) continue;
        unique_roots.push_back(r);
    }
    if (unique_roots.size() > 1 &&
        unique_roots.front() + kTwoPi - unique_roots.back() < merge_tol) {
        unique_roots.pop_back();
    }

    double dr_bound = 0.0;
    for (const Harmonic& t : rho_.harmonics()) dr_bound += t.n * std::hypot(t.a, t.b);
    const double cusp_tol = 1e-7 * (1.0 + dr_bound);

    out.reserve(unique_roots.size());
    for (double s : unique_roots) {
        out.push_back({s, point_at(s), std::abs(rho_.evaluate(s, 1)) > cusp_tol});
    }
    return out;
}

std::vector<IsogonalPair> Hedgehog::isogonal_family(double s, int k) const {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    std::vector<IsogonalPair> out;
    out.reserve(k);
    for (int j = 1; j <= k; ++j) {
        const double sj = s + kTwoPi * j / k;
        out.push_back({point_at(sj), perp_point_at(sj)});
    }
    return out;
}

Hedgehog as_hedgehog(const SteinerDisk& disk) {
    std::vector<Harmonic> first;
    if (disk.center.x != 0.0 || disk.center.y != 0.0)
        first.push_back({1, disk.center.x, disk.center.y});
    return Hedgehog(TrigPoly(disk.radius, std::move(first)));
}

}  // namespace hedgehog
