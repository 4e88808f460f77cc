#pragma once

// Independent numerical cross-checks for the closed-form quantities: polyline
// Green-theorem areas, periodic trapezoid quadrature, and winding numbers.
// Kept out of the core library; consumed only by the test suites and the
// fuzzing harness.

#include <functional>
#include <span>
#include <vector>

#include "hedgehog/geometry.hpp"
#include "hedgehog/hedgehog.hpp"

namespace hedgehog::oracle {

/// Green-theorem oriented area (1/2) int -y dx + x dy of a sampled closed
/// curve, evaluated on the piecewise-linear interpolant. The samples must
/// close up: |front - back| <= 1e-6 * diameter, and there must be at least
/// 64 segments. Relative error O(samples^-2) for smooth curves.
double green_area(std::span<const Point2> closed_curve);

/// Composite trapezoid rule for f over [0, 2pi]; spectrally accurate for
/// smooth 2pi-periodic integrands (exact for trigonometric polynomials of
/// degree below the sample count). samples >= 64.
double quadrature_integral(const std::function<double(double)>& f, int samples);

/// Winding number of a sampled closed curve about p, from summed signed
/// angle increments. p must keep a distance of at least 1e-9 * diameter
/// from the polyline; an accumulated turn farther than 0.05 from an integer
/// raises NumericalError (under-sampling).
int winding_number(std::span<const Point2> closed_curve, Point2 p);

/// samples+1 points curve(t_i), t_i = period * i / samples, i = 0..samples;
/// the duplicate endpoint makes the closure explicit for green_area.
std::vector<Point2> sample_closed(const std::function<Point2(double)>& curve,
                                  double period, int samples);

/// Fast path for sampling H(s) over [0, 2pi] (closed, samples+1 points).
std::vector<Point2> sample_hedgehog(const Hedgehog& curve, int samples);

}  // namespace hedgehog::oracle
