#include "hedgehog/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "detail.hpp"
#include "hedgehog/errors.hpp"
#include "hedgehog/hedgehog.hpp"
#include "hedgehog/inequality.hpp"
#include "hedgehog/midpoint.hpp"
#include "hedgehog/oracle.hpp"
#include "hedgehog/preserving.hpp"

namespace hedgehog::fuzz {

namespace {

class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    int uniform_int(int lo, int hi) {
        return lo + int(next() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Low-discrepancy angles for the pointwise checks.
double quasi_angle(int m) {
    constexpr double phi = 0.6180339887498948482;
    return kTwoPi * std::fmod((m + 1) * phi, 1.0);
}

constexpr int kPointDraws = 16;

using Outcome = std::optional<std::string>;

Outcome pass() { return std::nullopt; }

double line_angle(Point2 a, Point2 b) {
    return std::atan2(std::abs(cross(a, b)), std::abs(dot(a, b)));
}

// ---- k-independent checks ----------------------------------------------

Outcome check_area_green_polyline(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    const double closed = curve.oriented_area();
    const double quad = oracle::green_area(oracle::sample_hedgehog(curve, 1 << 14));
    const double tol = std::abs(closed) < 1e-3 ? 1e-9 : 1e-7 * std::abs(closed);
    if (std::abs(closed - quad) > tol)
        return "green polyline area " + fmt(quad) + " vs closed form " + fmt(closed);
    return pass();
}

Outcome check_length_quadrature(const TrigPoly& support, int) {
    const double closed = kTwoPi * support.constant();
    const double quad = oracle::quadrature_integral(
        [&support](double s) { return support.evaluate(s); }, 4096);
    if (std::abs(closed - quad) > 1e-7 * std::max(1.0, std::abs(closed)))
        return "length quadrature " + fmt(quad) + " vs closed form " + fmt(closed);
    return pass();
}

Outcome check_steiner_quadrature(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    const Point2 closed = curve.steiner_point();
    constexpr int n = 4096;
    Point2 acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double s = kTwoPi * i / n;
        acc += support.evaluate(s) * unit_dir(s);
    }
    const Point2 quad = (kTwoPi / n / kPi) * acc;
    if (norm(closed - quad) > 1e-8)
        return "steiner quadrature (" + fmt(quad.x) + ", " + fmt(quad.y) + ") vs (" +
               fmt(closed.x) + ", " + fmt(closed.y) + ")";
    return pass();
}

Outcome check_l2_quadrature(const TrigPoly& support, int) {
    const double closed = support.l2_norm_squared();
    const double quad = oracle::quadrature_integral(
        [&support](double s) { const double v = support.evaluate(s); return v * v; }, 4096);
    if (std::abs(closed - quad) > 1e-8 * std::max(1.0, std::abs(closed)))
        return "l2 quadrature " + fmt(quad) + " vs Parseval " + fmt(closed);
    return pass();
}

Outcome check_support_consistency(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        const double lhs = dot(curve.point_at(s), unit_dir(s));
        const double rhs = support.evaluate(s);
        if (std::abs(lhs - rhs) > 1e-10)
            return "support-line distance " + fmt(lhs) + " vs h(s) " + fmt(rhs) +
                   " at s = " + fmt(s);
    }
    return pass();
}

Outcome check_phase_shift_roundtrip(const TrigPoly& support, int) {
    const double alpha = quasi_angle(3);
    const TrigPoly back = support.phase_shift(alpha).phase_shift(-alpha);
    for (const Harmonic& t : support.harmonics()) {
        const auto [a, b] = back.coefficient(t.n);
        if (std::abs(a - t.a) > 1e-12 || std::abs(b - t.b) > 1e-12)
            return "phase-shift round trip drift at n = " + std::to_string(t.n);
    }
    if (std::abs(back.constant() - support.constant()) > 1e-12)
        return std::string("phase-shift round trip drift in constant term");
    return pass();
}

Outcome check_parallel_tangent(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    const double guard = 1e-3 * (1.0 + curve.curvature_poly().amplitude_bound());
    constexpr double eps = 1e-6;
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        if (std::abs(curve.radius_of_curvature(s)) <= guard) continue;
        const Point2 secant = curve.point_at(s + eps) - curve.point_at(s);
        if (line_angle(secant, unit_normal_rot(s)) > 1e-4)
            return "secant direction deviates from tangent at s = " + fmt(s);
    }
    return pass();
}

Outcome check_winding_oval(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    if (!curve.is_convex()) return pass();
    const int w = oracle::winding_number(oracle::sample_hedgehog(curve, 4096),
                                         curve.steiner_point());
    if (w != 1) return "winding about the Steiner point is " + std::to_string(w);
    return pass();
}

Outcome check_deficit_rigid_motion(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    const double deficit = isoperimetric_deficit(curve);
    const double tol = 1e-10 * std::max(1.0, deficit);
    const double rotated = isoperimetric_deficit(curve.rotated(quasi_angle(5)));
    if (std::abs(rotated - deficit) > tol)
        return "deficit changed under rotation: " + fmt(rotated) + " vs " + fmt(deficit);
    const TrigPoly translated = support + TrigPoly(0.0, {{1, 3.25, -1.5}});
    const double shifted = isoperimetric_deficit(Hedgehog(translated));
    if (std::abs(shifted - deficit) > tol)
        return "deficit changed under translation: " + fmt(shifted) + " vs " + fmt(deficit);
    return pass();
}

Outcome check_k_beyond_degree(const TrigPoly& support, int) {
    const int k = std::max(3, support.degree() + 1);
    const PreservingSet set(Hedgehog(support), k);
    if (!set.as_hedgehog().support().is_zero())
        return "preserving set of order " + std::to_string(k) +
               " (beyond the degree) is not the origin";
    return pass();
}

Outcome check_corollary_le_deficit(const TrigPoly& support, int) {
    const Hedgehog curve(support);
    if (!curve.is_convex()) return pass();
    const double deficit = isoperimetric_deficit(curve);
    const double tol = 1e-9 * std::max(1.0, deficit);
    const auto [b_inf, b_2] = corollary_bounds(curve);
    if (b_inf > deficit + tol)
        return "corollary sup-norm bound " + fmt(b_inf) + " exceeds deficit " + fmt(deficit);
    if (b_2 > deficit + tol)
        return "corollary L2 bound " + fmt(b_2) + " exceeds deficit " + fmt(deficit);
    return pass();
}

// ---- per-k checks --------------------------------------------------------

Outcome check_hk_periodicity(const TrigPoly& support, int k) {
    const TrigPoly hk = support.filter_indices(
        [k](int n) { return n % k == 0 && n > 1; }, false);
    const double period = kTwoPi / k;
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        if (std::abs(hk.evaluate(s + period) - hk.evaluate(s)) > 1e-10)
            return "h_k is not 2pi/k-periodic at s = " + fmt(s);
    }
    return pass();
}

Outcome check_directional_average_sum(const TrigPoly& support, int k) {
    const TrigPoly avg = support.directional_average(k);
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        double literal = 0.0;
        for (int j = 0; j < k; ++j) literal += support.evaluate(s + kTwoPi * j / k);
        literal /= k;
        if (std::abs(avg.evaluate(s) - literal) > 1e-10)
            return "index filter disagrees with the shifted sum at s = " + fmt(s);
    }
    return pass();
}

Outcome check_tk_shift(const TrigPoly& support, int k) {
    const TrigPoly tk = support.t_k(k);
    const TrigPoly avg = support.directional_average(k);
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        if (std::abs(tk.evaluate(s) - avg.evaluate(s + kPi / k)) > 1e-10)
            return "T_k differs from the shifted average at s = " + fmt(s);
    }
    return pass();
}

Outcome check_dual_route_preserving(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    const PreservingSet set(curve, k);
    const double tol = 1e-8 * (1.0 + support.amplitude_bound());
    for (int m = 0; m < 4; ++m) {
        const double s = quasi_angle(m);
        const Point2 oracle_point = preserving_from_isogonal(curve, k, s);
        const Point2 filter_point = set.point_at(s + kTwoPi / k);
        if (norm(oracle_point - filter_point) > tol)
            return "isogonal sum and Fourier filter disagree by " +
                   fmt(norm(oracle_point - filter_point)) + " at s = " + fmt(s);
    }
    return pass();
}

Outcome check_preserving_curvature_routes(const TrigPoly& support, int k) {
    const PreservingSet set(Hedgehog(support), k);
    const double tol =
        1e-9 * (1.0 + Hedgehog(support).curvature_poly().amplitude_bound());
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        const double direct = set.curvature_radius(s);
        const double isogonal = set.curvature_radius_isogonal(s);
        if (std::abs(direct - isogonal) > tol)
            return "curvature routes disagree: " + fmt(direct) + " vs " + fmt(isogonal);
    }
    return pass();
}

Outcome check_preserving_area_sign(const TrigPoly& support, int k) {
    const PreservingSet set(Hedgehog(support), k);
    const double area = set.oriented_area();
    if (area > 1e-12 * (1.0 + std::abs(area)))
        return "preserving-set oriented area " + fmt(area) + " is positive";
    const bool degenerate = set.as_hedgehog().support().is_zero();
    if (degenerate != (area == 0.0))
        return "preserving-set area " + fmt(area) + " inconsistent with degeneracy";
    return pass();
}

Outcome check_preserving_parallel_tangent(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    const PreservingSet set(curve, k);
    if (set.as_hedgehog().support().is_zero()) return pass();
    const double guard_parent = 1e-3 * (1.0 + curve.curvature_poly().amplitude_bound());
    const double guard_set =
        1e-3 * (1.0 + set.as_hedgehog().curvature_poly().amplitude_bound());
    constexpr double eps = 1e-5;
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        if (std::abs(curve.radius_of_curvature(s)) <= guard_parent) continue;
        if (std::abs(set.curvature_radius(s)) <= guard_set) continue;
        const Point2 tangent_parent = curve.point_at(s + eps) - curve.point_at(s - eps);
        const Point2 tangent_set = set.point_at(s + eps) - set.point_at(s - eps);
        if (line_angle(tangent_parent, tangent_set) > 1e-6)
            return "tangents of the curve and its preserving set deviate at s = " + fmt(s);
    }
    return pass();
}

Outcome check_preserving_singular_structure(const TrigPoly& support, int k) {
    const PreservingSet set(Hedgehog(support), k);
    const Hedgehog& hk = set.as_hedgehog();
    if (hk.support().is_zero()) return pass();
    const std::vector<SingularPoint> points = hk.singular_points();
    if (points.empty()) return std::string("nondegenerate preserving set has no singular points");
    if (points.size() > std::size_t(2 * hk.curvature_poly().degree()))
        return "found " + std::to_string(points.size()) +
               " singular points, above the trig root bound";
    double deriv_bound = 0.0;
    for (const Harmonic& t : hk.curvature_poly().harmonics())
        deriv_bound += t.n * std::hypot(t.a, t.b);
    bool all_simple = true;
    for (const SingularPoint& p : points)
        if (std::abs(hk.curvature_poly().evaluate(p.s, 1)) <= 1e-7 * (1.0 + deriv_bound))
            all_simple = false;
    if (all_simple && points.size() % std::size_t(k) != 0)
        return "singular point count " + std::to_string(points.size()) +
               " is not divisible by k";
    return pass();
}

Outcome check_centroid_identity(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    for (int m = 0; m < kPointDraws; ++m) {
        const double s = quasi_angle(m);
        const CircumscribedPolygon poly = circumscribed_polygon(curve, k, s);
        Point2 centroid{0.0, 0.0};
        for (const Point2& v : poly.vertices) centroid += v;
        centroid = centroid / k;
        const Point2 direct = midpoint_point_at(curve, k, s);
        if (norm(centroid - direct) > 1e-9)
            return "vertex centroid deviates by " + fmt(norm(centroid - direct)) +
                   " at s = " + fmt(s);
    }
    return pass();
}

Outcome check_polygon_edges(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    const double s = quasi_angle(7);
    const CircumscribedPolygon poly = circumscribed_polygon(curve, k, s);
    for (int j = 1; j <= k; ++j) {
        const double angle = s + kTwoPi * j / k;
        const Point2 u = unit_dir(angle);
        const double h = support.evaluate(angle);
        const Point2& tail = poly.vertices[j - 1];
        const Point2& head = poly.vertices[j % k];
        if (std::abs(dot(tail, u) - h) > 1e-9 || std::abs(dot(head, u) - h) > 1e-9)
            return "edge " + std::to_string(j) + " is off its support line";
        if (norm(poly.foot_points[j - 1] - h * u) > 1e-9)
            return "foot point " + std::to_string(j) + " is misplaced";
    }
    return pass();
}

Outcome check_midpoint_degeneracy_diameter(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    const bool flag = midpoint_is_degenerate(curve, k);
    const double diam = MidpointSet(curve, k).diameter(64 * k);
    const double threshold = 1e-9 * (1.0 + support.amplitude_bound());
    if (flag && diam > threshold)
        return "degenerate midpoint set has diameter " + fmt(diam);
    if (!flag) {
        // The flag can be tripped by the n = 1 harmonic alone, which only
        // translates the point; demand a visible diameter only when some
        // n >= 2 harmonic carries the congruence.
        bool visible = false;
        for (const Harmonic& t : support.harmonics())
            if (t.n >= 2 && (t.n % k == 1 || t.n % k == k - 1)) visible = true;
        if (visible && diam <= threshold)
            return "nondegenerate midpoint set has diameter " + fmt(diam);
    }
    return pass();
}

Outcome check_midpoint_green_identity(const TrigPoly& support, int k) {
    const double closed = midpoint_oriented_area(Hedgehog(support), k);
    const int n = 128 * k;  // divisible by k; far above the integrand degree
    const detail::GridEval grid = detail::evaluate_grid(support, n, true);
    double integral = 0.0;
    for (int i = 0; i < n; ++i) {
        Point2 point{0.0, 0.0}, velocity{0.0, 0.0};
        for (int j = 1; j <= k; ++j) {
            const int idx = (i + j * (n / k)) % n;
            const Point2 u = unit_dir(kTwoPi * idx / n);
            point += grid.value[idx] * u;
            velocity += grid.deriv[idx] * u + grid.value[idx] * perp(u);
        }
        integral += 0.5 * cross((2.0 / k) * point, (2.0 / k) * velocity);
    }
    integral *= kTwoPi / n;
    const double bound = support.amplitude_bound();
    const double tol = std::max(1e-7 * std::abs(double(k) * closed),
                                1e-9 * (1.0 + bound * bound));
    if (std::abs(integral - k * closed) > tol)
        return "full-period Green integral " + fmt(integral) + " vs k * closed form " +
               fmt(k * closed);
    return pass();
}

Outcome check_preserving_green_identity(const TrigPoly& support, int k) {
    const PreservingSet set(Hedgehog(support), k);
    const Hedgehog& hk = set.as_hedgehog();
    const double closed = set.oriented_area();
    const double integral = oracle::quadrature_integral(
        [&hk](double s) {
            const Point2 p = hk.point_at(s);
            const Point2 dp = hk.radius_of_curvature(s) * unit_normal_rot(s);
            return 0.5 * cross(p, dp);
        },
        512);
    const double bound = support.amplitude_bound();
    const double tol =
        std::max(1e-7 * std::abs(closed), 1e-9 * (1.0 + bound * bound));
    if (std::abs(integral - closed) > tol)
        return "preserving-set Green integral " + fmt(integral) + " vs closed form " +
               fmt(closed);
    return pass();
}

Outcome check_inequality_invariants(const TrigPoly& support, int k) {
    const Hedgehog curve(support);
    if (!curve.is_convex()) return pass();
    const TheoremCheck thm1 = check_thm1(curve, k);
    const TheoremCheck thm2 = check_thm2(curve, k);
    const auto [stab1, stab2] = stability_bounds(curve, k);
    const double deficit = thm1.lhs;
    const double tol = 1e-9 * std::max(1.0, deficit);
    if (thm1.slack < -tol) return "slack_thm1 = " + fmt(thm1.slack) + " < 0";
    if (thm2.slack < -tol) return "slack_thm2 = " + fmt(thm2.slack) + " < 0";
    if (thm2.slack > thm1.slack + tol)
        return "slack_thm2 " + fmt(thm2.slack) + " exceeds slack_thm1 " + fmt(thm1.slack);
    if (thm1.slack > deficit + tol)
        return "slack_thm1 " + fmt(thm1.slack) + " exceeds the deficit " + fmt(deficit);
    if (stab1 > thm1.slack + tol)
        return "stability bound 1 = " + fmt(stab1) + " exceeds slack_thm1 = " + fmt(thm1.slack);
    if (stab2 > thm1.slack + tol)
        return "stability bound 2 = " + fmt(stab2) + " exceeds slack_thm1 = " + fmt(thm1.slack);
    if (thm1.equality != thm2.equality)
        return std::string("equality flags of the two inequalities disagree");
    if (thm1.equality && std::abs(thm1.slack) > tol)
        return "equality flagged but slack_thm1 = " + fmt(thm1.slack);
    return pass();
}

}  // namespace

const std::vector<Check>& invariant_checks() {
    static const std::vector<Check> registry = {
        {"area_green_polyline", false, check_area_green_polyline},
        {"length_quadrature", false, check_length_quadrature},
        {"steiner_quadrature", false, check_steiner_quadrature},
        {"l2_quadrature", false, check_l2_quadrature},
        {"support_consistency", false, check_support_consistency},
        {"phase_shift_roundtrip", false, check_phase_shift_roundtrip},
        {"parallel_tangent", false, check_parallel_tangent},
        {"winding_oval", false, check_winding_oval},
        {"deficit_rigid_motion", false, check_deficit_rigid_motion},
        {"k_beyond_degree_degenerate", false, check_k_beyond_degree},
        {"corollary_le_deficit", false, check_corollary_le_deficit},
        {"hk_periodicity", true, check_hk_periodicity},
        {"directional_average_shifted_sum", true, check_directional_average_sum},
        {"tk_shift_identity", true, check_tk_shift},
        {"dual_route_preserving", true, check_dual_route_preserving},
        {"preserving_curvature_routes", true, check_preserving_curvature_routes},
        {"preserving_area_sign", true, check_preserving_area_sign},
        {"preserving_parallel_tangent", true, check_preserving_parallel_tangent},
        {"preserving_singular_structure", true, check_preserving_singular_structure},
        {"centroid_identity", true, check_centroid_identity},
        {"polygon_edges", true, check_polygon_edges},
        {"midpoint_degeneracy_diameter", true, check_midpoint_degeneracy_diameter},
        {"midpoint_green_identity", true, check_midpoint_green_identity},
        {"preserving_green_identity", true, check_preserving_green_identity},
        {"inequality_invariants", true, check_inequality_invariants},
    };
    return registry;
}

void run_invariant_suite(const TrigPoly& support, int k_min, int k_max,
                         const CheckSink& sink) {
    for (const Check& check : invariant_checks()) {
        if (check.per_k) {
            for (int k = k_min; k <= k_max; ++k) {
                const Outcome outcome = check.run(support, k);
                sink(check.name, k, !outcome.has_value(), outcome.value_or(""));
            }
        } else {
            const Outcome outcome = check.run(support, 0);
            sink(check.name, 0, !outcome.has_value(), outcome.value_or(""));
        }
    }
}

TrigPoly random_convex_support(std::uint64_t seed, int trial, int max_degree) {
    SplitMix mixer(seed);
    mixer.next();
    SplitMix rng(mixer.next() ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(trial + 1)));
    double a0 = 100.0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        a0 = rng.uniform(10.0, 200.0);
        const int degree = rng.uniform_int(2, std::max(2, max_degree));
        const double scale = rng.uniform(0.5, 6.0) * (attempt < 32 ? 1.0 : 0.25);
        std::vector<Harmonic> harmonics;
        harmonics.reserve(degree);
        for (int n = 1; n <= degree; ++n) {
            const double decay = scale / (double(n) * n);
            harmonics.push_back(
                {n, decay * rng.uniform(-1.0, 1.0), decay * rng.uniform(-1.0, 1.0)});
        }
        TrigPoly candidate(a0, std::move(harmonics));
        if (Hedgehog(candidate).is_convex()) return candidate;
    }
    return TrigPoly(a0);  // deterministic fallback: a circle
}

namespace {

TrigPoly zero_coefficient(const TrigPoly& f, int index, bool zero_a) {
    std::vector<Harmonic> harmonics = f.harmonics();
    for (Harmonic& t : harmonics) {
        if (t.n == index) {
            (zero_a ? t.a : t.b) = 0.0;
            break;
        }
    }
    return TrigPoly(f.constant(), std::move(harmonics));
}

}  // namespace

TrigPoly minimize_counterexample(const TrigPoly& start, const Check& check, int k) {
    auto still_fails = [&](const TrigPoly& f) {
        try {
            return check.run(f, k).has_value();
        } catch (const std::exception&) {
            return false;
        }
    };
    if (!still_fails(start)) return start;
    TrigPoly current = start;
    bool progress = true;
    while (progress) {
        progress = false;
        const std::vector<Harmonic> harmonics = current.harmonics();
        for (auto it = harmonics.rbegin(); it != harmonics.rend(); ++it) {
            for (const bool zero_a : {true, false}) {
                if ((zero_a ? it->a : it->b) == 0.0) continue;
                const TrigPoly candidate = zero_coefficient(current, it->n, zero_a);
                if (still_fails(candidate)) {
                    current = candidate;
                    progress = true;
                }
            }
        }
    }
    return current;
}

Result run(const Options& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (options.max_degree < 2) throw std::invalid_argument("max degree must be >= 2");
    if (options.k_min < 3 || options.k_max < options.k_min)
        throw std::invalid_argument("need 3 <= k_min <= k_max");
    const int jobs = std::max(1, options.jobs);

    struct TrialOutcome {
        long long checks = 0;
        long long passed = 0;
        std::vector<Violation> violations;
        bool numerical_failure = false;
    };
    std::vector<TrialOutcome> outcomes(options.trials);

    auto work = [&outcomes, &options, jobs](int worker) {
        for (int trial = worker; trial < options.trials; trial += jobs) {
            TrialOutcome& out = outcomes[trial];
            const TrigPoly support =
                random_convex_support(options.seed, trial, options.max_degree);
            try {
                run_invariant_suite(
                    support, options.k_min, options.k_max,
                    [&out, &support, trial](const std::string& name, int k, bool ok,
                                            const std::string& detail) {
                        ++out.checks;
                        if (ok) {
                            ++out.passed;
                        } else {
                            out.violations.push_back(
                                {trial, k, name, detail, support, support});
                        }
                    });
            } catch (const std::exception&) {
                out.numerical_failure = true;
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) workers.emplace_back(work, w);
        for (std::thread& t : workers) t.join();
    }

    Result result;
    result.trials = options.trials;
    for (const TrialOutcome& out : outcomes) {
        result.checks += out.checks;
        result.passed += out.passed;
        result.violations += static_cast<long long>(out.violations.size());
        if (out.numerical_failure) ++result.numerical_failures;
        for (const Violation& v : out.violations) ++result.failures_by_check[v.check];
        if (!result.first && !out.violations.empty()) result.first = out.violations.front();
    }
    if (result.first) {
        for (const Check& check : invariant_checks()) {
            if (check.name == result.first->check) {
                result.first->minimized =
                    minimize_counterexample(result.first->curve, check, result.first->k);
                break;
            }
        }
    }
    return result;
}

}  // namespace hedgehog::fuzz
