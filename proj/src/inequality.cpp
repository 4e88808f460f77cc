#include "hedgehog/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "hedgehog/errors.hpp"

namespace hedgehog {

namespace {

void require_k(int k) {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
}

void require_oval(const Hedgehog& curve, const ReportOptions& options) {
    if (!options.unchecked && !curve.is_convex())
        throw DomainError("input is not convex: outside theorem hypotheses "
                          "(use the unchecked mode to compute anyway)");
}

double equality_scale(const Hedgehog& curve, const ReportOptions& options) {
    return options.equality_tol * std::max(1.0, std::abs(curve.support().constant()));
}

// 2 pi^2 sum over harmonics selected by pred of (n^2 - 1)(a^2 + b^2).
double deficit_sum(const Hedgehog& curve, const std::function<bool(int)>& pred) {
    double sum = 0.0;
    for (const Harmonic& t : curve.support().harmonics())
        if (t.n > 1 && pred(t.n))
            sum += (double(t.n) * t.n - 1.0) * (t.a * t.a + t.b * t.b);
    return 2.0 * kPi * kPi * sum;
}

}  // namespace

double isoperimetric_deficit(const Hedgehog& curve) {
    return deficit_sum(curve, [](int) { return true; });
}

TheoremCheck check_thm1(const Hedgehog& oval, int k, const ReportOptions& options) {
    require_k(k);
    require_oval(oval, options);
    TheoremCheck out;
    out.lhs = isoperimetric_deficit(oval);
    out.rhs = 4.0 * kPi * std::abs(PreservingSet(oval, k).oriented_area());
    // Cancellation-free form of lhs - rhs.
    out.slack = deficit_sum(oval, [k](int n) { return n % k != 0; });
    out.equality = all_kgons_regular(oval, k, equality_scale(oval, options));
    return out;
}

TheoremCheck check_thm2(const Hedgehog& oval, int k, const ReportOptions& options) {
    require_k(k);
    require_oval(oval, options);
    TheoremCheck out = check_thm1(oval, k, {.unchecked = true, .equality_tol = options.equality_tol});
    const double midpoint_term = 2.0 * kPi * std::abs(midpoint_oriented_area(oval, k));
    out.rhs += midpoint_term;
    out.slack -= midpoint_term;
    return out;
}

double d_inf(const Hedgehog& a, const Hedgehog& b) {
    const TrigPoly diff = a.support() - b.support();
    if (diff.is_zero()) return 0.0;
    if (diff.harmonics().empty()) return std::abs(diff.constant());

    const int n = 4096 * std::max(1, diff.degree());
    const double step = kTwoPi / n;
    const detail::GridEval grid = detail::evaluate_grid(diff, n, false);

    double grid_max = 0.0;
    for (int i = 0; i < n; ++i) grid_max = std::max(grid_max, std::abs(grid.value[i]));

    double deriv_bound = 0.0;
    for (const Harmonic& t : diff.harmonics()) deriv_bound += t.n * std::hypot(t.a, t.b);
    const double margin = deriv_bound * step;

    auto abs_eval = [&diff](double s) { return std::abs(diff.evaluate(s)); };
    double best = grid_max;
    for (int i = 0; i < n; ++i) {
        const double v = std::abs(grid.value[i]);
        if (v + margin < grid_max) continue;
        const double prev = std::abs(grid.value[(i + n - 1) % n]);
        const double next = std::abs(grid.value[(i + 1) % n]);
        if (v < prev || v < next) continue;  // refine grid-local maxima only
        const double s = detail::golden_max(abs_eval, (i - 1) * step, (i + 1) * step, 1e-12);
        best = std::max(best, abs_eval(s));
    }

    const double certificate = diff.amplitude_bound();
    if (best > certificate * (1.0 + 1e-9) + 1e-12)
        throw NumericalError("sup-norm refinement " + std::to_string(best) +
                             " exceeds its amplitude certificate " +
                             std::to_string(certificate));
    return best;
}

double d_2(const Hedgehog& a, const Hedgehog& b) {
    return std::sqrt((a.support() - b.support()).l2_norm_squared());
}

namespace {

std::pair<double, double> stability_bounds_impl(const Hedgehog& oval, int k) {
    const PreservingSet preserving(oval, k);
    const Hedgehog reference =
        minkowski_sum(preserving.as_hedgehog(), as_hedgehog(oval.steiner_disk()));
    const double di = d_inf(oval, reference);
    const double d2 = d_2(oval, reference);
    const double cot = std::cos(kPi / k) / std::sin(kPi / k);
    const double stab1 = 8.0 * kPi * kPi * k / (2.0 * kPi * cot + k) * di * di;
    const double stab2 = 6.0 * kPi * d2 * d2;
    return {stab1, stab2};
}

std::pair<double, double> corollary_bounds_impl(const Hedgehog& oval) {
    const Hedgehog disk = as_hedgehog(oval.steiner_disk());
    const double di = d_inf(oval, disk);
    const double d2 = d_2(oval, disk);
    return {(8.0 / 3.0) * kPi * kPi * di * di, 6.0 * kPi * d2 * d2};
}

}  // namespace

std::pair<double, double> stability_bounds(const Hedgehog& oval, int k,
                                           const ReportOptions& options) {
    require_k(k);
    require_oval(oval, options);
    return stability_bounds_impl(oval, k);
}

std::pair<double, double> corollary_bounds(const Hedgehog& oval,
                                           const ReportOptions& options) {
    require_oval(oval, options);
    return corollary_bounds_impl(oval);
}

InequalityReport full_report(const Hedgehog& oval, int k, const ReportOptions& options) {
    require_k(k);
    InequalityReport report;
    report.k = k;
    report.convexity_status = oval.convexity();
    if (!options.unchecked && report.convexity_status != Convexity::convex)
        throw DomainError("input is not convex: outside theorem hypotheses "
                          "(use the unchecked mode to compute anyway)");

    const ReportOptions pass_through{.unchecked = true, .equality_tol = options.equality_tol};
    const TheoremCheck thm1 = check_thm1(oval, k, pass_through);
    const TheoremCheck thm2 = check_thm2(oval, k, pass_through);

    report.deficit = thm1.lhs;
    report.abs_area_preserving = thm1.rhs;
    report.abs_area_midpoint_term = 2.0 * kPi * std::abs(midpoint_oriented_area(oval, k));
    report.slack_thm1 = thm1.slack;
    report.slack_thm2 = thm2.slack;
    report.equality_thm1 = thm1.equality;
    report.equality_thm2 = thm2.equality;

    const Hedgehog reference = minkowski_sum(PreservingSet(oval, k).as_hedgehog(),
                                             as_hedgehog(oval.steiner_disk()));
    report.d_inf = d_inf(oval, reference);
    report.d_2 = d_2(oval, reference);
    const double cot = std::cos(kPi / k) / std::sin(kPi / k);
    report.stab1_bound =
        8.0 * kPi * kPi * k / (2.0 * kPi * cot + k) * report.d_inf * report.d_inf;
    report.stab2_bound = 6.0 * kPi * report.d_2 * report.d_2;
    report.corollary_bounds = corollary_bounds_impl(oval);
    return report;
}

}  // namespace hedgehog
