#pragma once

#include <vector>

#include "hedgehog/hedgehog.hpp"

namespace hedgehog {

/// Equiangular k-gon circumscribed about a hedgehog: each edge
/// vertices[j-1] -> vertices[j] lies on the support line with outward normal
/// u(base_angle + 2 pi j / k) (cyclically, with vertices[k-1] closing to
/// vertices[0]); foot_points[j-1] is the foot of the perpendicular from the
/// origin onto that edge's line.
struct CircumscribedPolygon {
    int k = 0;
    double base_angle = 0.0;
    std::vector<Point2> vertices;
    std::vector<Point2> foot_points;
};

/// Builds the circumscribed polygon with edge normals at
/// base_angle + 2 pi j / k, j = 1..k. Each vertex is the intersection of two
/// consecutive support lines; sin(2 pi / k) never vanishes for k >= 3, so the
/// construction is division-safe. Requires k >= 3.
CircumscribedPolygon circumscribed_polygon(const Hedgehog& curve, int k, double s);

/// Centroid of the circumscribed polygon family,
///
///     (2/k) sum_{j=1}^k h(s + 2 pi j / k) u(s + 2 pi j / k),
///
/// which equals the vertex centroid of circumscribed_polygon(curve, k, s).
/// Requires k >= 3.
Point2 midpoint_point_at(const Hedgehog& curve, int k, double s);

/// True iff no stored harmonic index n >= 1 is congruent to +-1 (mod k).
/// Note the n = 1 harmonic always violates the congruence test unless zero:
/// geometrically it only translates the degenerate point, so a curve failing
/// the flag solely through its first harmonic still samples to a single
/// point. Requires k >= 3.
bool midpoint_is_degenerate(const Hedgehog& curve, int k);

/// Closed-form oriented area
///
///     pi sum_{m>=1} m (a_{km-1}^2 + b_{km-1}^2 - a_{km+1}^2 - b_{km+1}^2);
///
/// may be positive, negative or zero. The Green integral of the full-period
/// parameterization equals k times this value (k-fold covering).
/// Requires k >= 3.
double midpoint_oriented_area(const Hedgehog& curve, int k);

/// True iff every equiangular circumscribed k-gon is regular with centroid
/// at the Steiner point: all harmonics with n > 1 and k not dividing n have
/// magnitude sqrt(a^2 + b^2) <= tolerance.
bool all_kgons_regular(const Hedgehog& curve, int k, double tolerance);

/// The curve of centroids of all equiangular k-gons circumscribed about the
/// parent, closed over [0, 2 pi / k]. Generally not a hedgehog.
class MidpointSet {
  public:
    MidpointSet(const Hedgehog& parent, int k);  // requires k >= 3

    int order() const { return k_; }
    const Hedgehog& parent() const { return parent_; }
    double period() const { return kTwoPi / k_; }

    Point2 point_at(double s) const { return midpoint_point_at(parent_, k_, s); }

    /// n points at s_i = period * i / n, i = 0..n-1.
    std::vector<Point2> sample(int n) const;

    /// Exact max pairwise distance of the sampled curve (hull + brute force
    /// over hull vertices). samples <= 0 selects the default 256 * k.
    double diameter(int samples = 0) const;

  private:
    Hedgehog parent_;
    int k_;
};

}  // namespace hedgehog
