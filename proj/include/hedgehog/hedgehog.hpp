#pragma once

#include <vector>

#include "hedgehog/geometry.hpp"
#include "hedgehog/trig_poly.hpp"

namespace hedgehog {

enum class Convexity { convex, nonconvex, marginal };

struct SteinerDisk {
    Point2 center;
    double radius = 0.0;  // |average width| / 2; zero disks are allowed
};

struct SingularPoint {
    double s = 0.0;  // parameter in [0, 2pi)
    Point2 location;
    bool is_cusp = false;
};

struct IsogonalPair {
    Point2 point;  // H(s_j)
    Point2 perp;   // H_perp(s_j), the quarter-turn image under the induced parameterization
};

/// Closed planar curve parameterized by its support function,
///
///     H(s) = h(s) u(s) + h'(s) u'(s),   u(s) = (cos s, sin s),
///
/// oriented counterclockwise by the outward normal angle s. Singular and
/// self-intersecting curves are first-class citizens; ovals are the convex
/// subcase. For singular curves algebraic_length and oriented_area are the
/// signed quantities 2 pi a0 and the winding-weighted Green integral, not
/// geometric arc length or set-theoretic area.
class Hedgehog {
  public:
    Hedgehog() = default;  // the origin point (zero support)
    explicit Hedgehog(TrigPoly support);

    const TrigPoly& support() const { return support_; }

    /// rho = h + h'' as a trigonometric polynomial; its zeros are the
    /// singular parameters.
    const TrigPoly& curvature_poly() const { return rho_; }

    Point2 point_at(double s) const;

    /// Point of rot(H, pi/2) under the induced parameterization; equals
    /// point_at(s) rotated a quarter turn about the origin.
    Point2 perp_point_at(double s) const;

    /// Counterclockwise rotation about the origin: support h(s - alpha).
    Hedgehog rotated(double alpha) const;

    double width(double s) const;      // h(s) + h(s + pi)
    double average_width() const;      // 2 a0
    Point2 steiner_point() const;      // (a1, b1)
    SteinerDisk steiner_disk() const;
    double algebraic_length() const;   // 2 pi a0
    double oriented_area() const;      // pi a0^2 - (pi/2) sum (n^2-1)(a_n^2+b_n^2)
    double radius_of_curvature(double s) const;  // h(s) + h''(s)

    /// Three-valued classification of the sign of rho over [0, 2pi]:
    /// convex when the sign is constant and bounded away from zero by tol.
    Convexity convexity(double tol = 1e-9) const;
    /// Boolean collapse of convexity(); marginal counts as not convex.
    bool is_convex(double tol = 1e-9) const;

    /// All zeros of rho on [0, 2pi), sorted by s. A zero is a cusp iff
    /// rho' does not vanish there: with H' = rho u', the determinant test
    /// det(H'', H''') != 0 at rho = 0 reduces to rho' != 0, since
    /// H'' = rho' u' + rho u'' and H''' collapse the determinant to a
    /// positive multiple of rho'^3. Simple zeros are bracketed on a uniform
    /// grid of max(4096, 64 deg rho) samples and bisected to 1e-13, then
    /// polished with one Newton step; tangential zeros are reported from
    /// grid minima of |rho| that dip below 1e-9 without a sign change.
    /// An identically zero rho (degenerate point curve) yields an empty list.
    std::vector<SingularPoint> singular_points() const;

    /// The k pairs (H(s + 2 pi j / k), H_perp(s + 2 pi j / k)), j = 1..k.
    /// The support-line normals of consecutive pairs differ by 2 pi / k.
    /// Requires k >= 3.
    std::vector<IsogonalPair> isogonal_family(double s, int k) const;

    friend bool operator==(const Hedgehog&, const Hedgehog&) = default;

  private:
    TrigPoly support_;
    TrigPoly rho_;
};

/// The Steiner disk as a hedgehog: support |a0| + a1 cos s + b1 sin s.
Hedgehog as_hedgehog(const SteinerDisk& disk);

}  // namespace hedgehog
