#pragma once

#include <vector>

#include "hedgehog/hedgehog.hpp"

namespace hedgehog {

/// The kth order preserving set of a hedgehog: the hedgehog whose support
/// function h_k keeps exactly the parent's harmonics with index divisible by
/// k (excluding the constant term),
///
///     h_k(s) = (1/k) sum_j h(s + 2 pi j / k) - a0 = A_k[h](s) - a0.
///
/// h_k is 2pi/k-periodic; whenever it is not identically zero the curve is
/// singular, with a cusp count divisible by k when all zeros of its
/// curvature radius are simple. A parent with no k-divisible harmonics
/// degenerates to the origin point (empty support, point_at == (0,0)).
class PreservingSet {
  public:
    PreservingSet(const Hedgehog& parent, int k);  // requires k >= 3

    int order() const { return k_; }
    const Hedgehog& parent() const { return parent_; }
    const Hedgehog& as_hedgehog() const { return hk_; }

    Point2 point_at(double s) const { return hk_.point_at(s); }

    /// (pi/2) sum_{k|n, n>1} (1 - n^2)(a_n^2 + b_n^2); always <= 0, zero
    /// exactly when the set degenerates to a point.
    double oriented_area() const { return hk_.oriented_area(); }

    double curvature_radius(double s) const { return hk_.radius_of_curvature(s); }

    /// Same quantity through the isogonal mean of parent curvature radii:
    /// (1/k) sum_j rho_H(s + 2 pi j / k) - a0. Dual route to
    /// curvature_radius, kept literal for cross-checking.
    double curvature_radius_isogonal(double s) const;

    /// Singular points of the set. When the zeros are finite, nonempty and
    /// all simple, their count must be divisible by k; a violated count is
    /// reported as a warning on stderr, or thrown as NumericalError when
    /// strict is set (multiple or tangential zeros can defeat the counting).
    std::vector<SingularPoint> singularities(bool strict = false) const;

  private:
    Hedgehog parent_;
    int k_;
    Hedgehog hk_;
};

/// The defining isogonal-family sum evaluated literally: the family points
/// p_j = H(s + 2 pi j / k), j = 1..k, are combined with weights that leave
/// p_1 unrotated,
///
///     (1/k) sum_j [ cos(2 pi (j-1)/k) p_j - sin(2 pi (j-1)/k) p_j_perp ]
///         - (w/2) u(s + 2 pi / k),
///
/// where w is the average width and u(s + 2 pi / k) the outward normal at
/// p_1. Equals PreservingSet(H, k).point_at(s + 2 pi / k); serves as the
/// geometric oracle for the Fourier-filter construction.
Point2 preserving_from_isogonal(const Hedgehog& curve, int k, double s);

/// Minkowski average of k copies rotated by multiples of 2 pi / k about the
/// origin; support = A_k[h] = h_k + a0. Requires k >= 3.
///
/// Note: the symmetral coincides supportwise with
/// minkowski_sum(preserving set, Steiner disk) only when the Steiner point
/// sits at the origin (a1 = b1 = 0) — the average kills first harmonics
/// while the disk keeps them.
Hedgehog k_central_symmetral(const Hedgehog& curve, int k);

/// Support functions add under Minkowski sums.
Hedgehog minkowski_sum(const Hedgehog& a, const Hedgehog& b);

}  // namespace hedgehog
