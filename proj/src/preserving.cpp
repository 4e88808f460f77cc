#include "hedgehog/preserving.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "hedgehog/errors.hpp"

namespace hedgehog {

PreservingSet::PreservingSet(const Hedgehog& parent, int k)
    : parent_(parent), k_(k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    hk_ = Hedgehog(parent.support().filter_indices(
        [k](int n) { return n % k == 0 && n > 1; }, false));
}

double PreservingSet::curvature_radius_isogonal(double s) const {
    double mean = 0.0;
    for (int j = 1; j <= k_; ++j)
        mean += parent_.radius_of_curvature(s + kTwoPi * j / k_);
    return mean / k_ - 0.5 * parent_.average_width();
}

std::vector<SingularPoint> PreservingSet::singularities(bool strict) const {
    std::vector<SingularPoint> points = hk_.singular_points();
    if (!points.empty() && points.size() % std::size_t(k_) != 0) {
        // Divisibility can only fail when zeros are multiple or tangential;
        // simple zeros of a 2pi/k-periodic curvature radius come in k-tuples.
        double dr_bound = 0.0;
        for (const Harmonic& t : hk_.curvature_poly().harmonics())
            dr_bound += t.n * std::hypot(t.a, t.b);
        bool all_simple = true;
        for (const SingularPoint& p : points)
            if (std::abs(hk_.curvature_poly().evaluate(p.s, 1)) <= 1e-7 * (1.0 + dr_bound))
                all_simple = false;
        if (all_simple) {
            const std::string msg =
                "preserving set singularity count " + std::to_string(points.size()) +
                " is not divisible by k = " + std::to_string(k_);
            if (strict) throw NumericalError(msg);
            std::fprintf(stderr, "hedgehog: warning: %s\n", msg.c_str());
        }
    }
    return points;
}

Point2 preserving_from_isogonal(const Hedgehog& curve, int k, double s) {
    const std::vector<IsogonalPair> family = curve.isogonal_family(s, k);
    Point2 acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) {
        const double angle = kTwoPi * (j - 1) / k;
        const IsogonalPair& pair = family[j - 1];
        acc += std::cos(angle) * pair.point - std::sin(angle) * pair.perp;
    }
    const double half_width = 0.5 * curve.average_width();
    return acc / k - half_width * unit_dir(s + kTwoPi / k);
}

Hedgehog k_central_symmetral(const Hedgehog& curve, int k) {
    return Hedgehog(curve.support().directional_average(k));
}

Hedgehog minkowski_sum(const Hedgehog& a, const Hedgehog& b) {
    return Hedgehog(a.support() + b.support());
}

}  // namespace hedgehog
