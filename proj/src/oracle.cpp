#include "hedgehog/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "hedgehog/errors.hpp"

namespace hedgehog::oracle {

namespace {

double curve_diameter_estimate(std::span<const Point2> pts) {
    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const Point2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    return std::hypot(max_x - min_x, max_y - min_y);
}

void check_closed(std::span<const Point2> pts) {
    if (pts.size() < 65) throw std::invalid_argument("need at least 64 segments");
    const double diam = curve_diameter_estimate(pts);
    const double gap = distance(pts.front(), pts.back());
    if (gap > 1e-6 * std::max(diam, 1e-300))
        throw std::invalid_argument("curve samples do not close up (gap " +
                                    std::to_string(gap) + ")");
}

}  // namespace

double green_area(std::span<const Point2> closed_curve) {
    check_closed(closed_curve);
    const std::size_t n = closed_curve.size() - 1;  // drop duplicate endpoint
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = closed_curve[i];
        const Point2 b = closed_curve[(i + 1) % n];
        twice_area += cross(a, b);
    }
    return 0.5 * twice_area;
}

double quadrature_integral(const std::function<double(double)>& f, int samples) {
    if (samples < 64) throw std::invalid_argument("need at least 64 samples");
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) sum += f(kTwoPi * i / samples);
    return sum * kTwoPi / samples;
}

int winding_number(std::span<const Point2> closed_curve, Point2 p) {
    check_closed(closed_curve);
    const double diam = curve_diameter_estimate(closed_curve);
    const double exclusion = 1e-9 * diam;
    const std::size_t n = closed_curve.size() - 1;

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = closed_curve[i] - p;
        const Point2 b = closed_curve[(i + 1) % n] - p;
        // distance from p to the segment
        const Point2 ab = b - a;
        const double len2 = dot(ab, ab);
        double t = len2 > 0.0 ? -dot(a, ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        if (norm(a + t * ab) <= exclusion)
            throw std::invalid_argument("point lies on the sampled curve");
        total += std::atan2(cross(a, b), dot(a, b));
    }
    const double turns = total / kTwoPi;
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) > 0.05)
        throw NumericalError("winding accumulation " + std::to_string(turns) +
                             " is not close to an integer (under-sampled curve)");
    return int(nearest);
}

std::vector<Point2> sample_closed(const std::function<Point2(double)>& curve,
                                  double period, int samples) {
    std::vector<Point2> pts;
    pts.reserve(samples + 1);
    for (int i = 0; i <= samples; ++i) pts.push_back(curve(period * i / samples));
    return pts;
}

std::vector<Point2> sample_hedgehog(const Hedgehog& curve, int samples) {
    const detail::GridEval g = detail::evaluate_grid(curve.support(), samples, true);
    std::vector<Point2> pts;
    pts.reserve(samples + 1);
    for (int i = 0; i < samples; ++i) {
        const double s = kTwoPi * i / samples;
        pts.push_back(g.value[i] * unit_dir(s) + g.deriv[i] * unit_normal_rot(s));
    }
    pts.push_back(pts.front());
    return pts;
}

}  // namespace hedgehog::oracle
