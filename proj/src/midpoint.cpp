#include "hedgehog/midpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail.hpp"

namespace hedgehog {

namespace {

void require_k(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
}

}  // namespace

CircumscribedPolygon circumscribed_polygon(const Hedgehog& curve, int k, double s) {
    require_k(k);
    const TrigPoly& h = curve.support();
    const double sector = kTwoPi / k;
    const double cos_sector = std::cos(sector);
    const double sin_sector = std::sin(sector);

    CircumscribedPolygon poly;
    poly.k = k;
    poly.base_angle = s;
    poly.vertices.reserve(k);
    poly.foot_points.reserve(k);
    for (int j = 1; j <= k; ++j) {
        const double aj = s + sector * j;       // normal angle of edge j
        const double aj1 = s + sector * (j + 1);
        const double hj = h.evaluate(aj);
        const double hj1 = h.evaluate(aj1);
        const double cs1 = std::cos(aj1), sn1 = std::sin(aj1);
        // Intersection of the support lines with normals u(aj) and u(aj1).
        const double along = (hj - hj1 * cos_sector) / sin_sector;
        poly.vertices.push_back({hj1 * cs1 + along * sn1, hj1 * sn1 - along * cs1});
        poly.foot_points.push_back(hj * unit_dir(aj));
    }
    // vertices[j-1] is the corner between edges j and j+1; rotate so that the
    // edge vertices[j-1] -> vertices[j] lies on the line with normal u(s + 2pi j / k).
    std::rotate(poly.vertices.begin(), poly.vertices.end() - 1, poly.vertices.end());
    return poly;
}

Point2 midpoint_point_at(const Hedgehog& curve, int k, double s) {
    require_k(k);
    const TrigPoly& h = curve.support();
    Point2 acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) {
        const double sj = s + kTwoPi * j / k;
        acc += h.evaluate(sj) * unit_dir(sj);
    }
    return (2.0 / k) * acc;
}

bool midpoint_is_degenerate(const Hedgehog& curve, int k) {
    require_k(k);
    for (const Harmonic& t : curve.support().harmonics()) {
        const int r = t.n % k;
        if (r == 1 || r == k - 1) return false;
    }
    return true;
}

double midpoint_oriented_area(const Hedgehog& curve, int k) {
    require_k(k);
    double sum = 0.0;
    for (const Harmonic& t : curve.support().harmonics()) {
        const double power = t.a * t.a + t.b * t.b;
        if ((t.n + 1) % k == 0) {
            sum += double((t.n + 1) / k) * power;  // n = km - 1
        } else if (t.n > 1 && (t.n - 1) % k == 0) {
            sum -= double((t.n - 1) / k) * power;  // n = km + 1, m >= 1
        }
    }
    return kPi * sum;
}

bool all_kgons_regular(const Hedgehog& curve, int k, double tolerance) {
    require_k(k);
    for (const Harmonic& t : curve.support().harmonics()) {
        if (t.n > 1 && t.n % k != 0 && std::hypot(t.a, t.b) > tolerance)
            return false;
    }
    return true;
}

MidpointSet::MidpointSet(const Hedgehog& parent, int k) : parent_(parent), k_(k) {
    require_k(k);
}

std::vector<Point2> MidpointSet::sample(int n) const {
    // The k shifted support values at the n sample parameters all live on one
    // uniform grid of n*k points over [0, 2pi]: s_i + 2 pi j / k maps to
    // index i + j*n (mod n*k).
    const int total = n * k_;
    const detail::GridEval grid = detail::evaluate_grid(parent_.support(), total, false);
    std::vector<Point2> dirs(total);
    for (int i = 0; i < total; ++i) dirs[i] = unit_dir(kTwoPi * i / total);

    std::vector<Point2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        Point2 acc{0.0, 0.0};
        for (int j = 1; j <= k_; ++j) {
            const int idx = (i + j * n) % total;
            acc += grid.value[idx] * dirs[idx];
        }
        pts.push_back((2.0 / k_) * acc);
    }
    return pts;
}

namespace {

// Andrew monotone chain; collinear and coincident points are tolerated.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> hull(2 * pts.size());
    std::size_t m = 0;
    for (const Point2& p : pts) {
        while (m >= 2 && cross(hull[m - 1] - hull[m - 2], p - hull[m - 2]) <= 0.0) --m;
        hull[m++] = p;
    }
    const std::size_t lower = m + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (m >= lower && cross(hull[m - 1] - hull[m - 2], *it - hull[m - 2]) <= 0.0) --m;
        hull[m++] = *it;
    }
    hull.resize(m - 1);
    return hull;
}

}  // namespace

double MidpointSet::diameter(int samples) const {
    if (samples <= 0) samples = 256 * k_;
    const std::vector<Point2> hull = convex_hull(sample(samples));
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, distance(hull[i], hull[j]));
    return best;
}

}  // namespace hedgehog
