#pragma once

#include <utility>

#include "hedgehog/hedgehog.hpp"
#include "hedgehog/midpoint.hpp"
#include "hedgehog/preserving.hpp"

namespace hedgehog {

/// Everything the isoperimetric-type certification produces for one oval and
/// one k: the deficit L^2 - 4 pi A, the two lower-bound terms, the slacks of
/// both inequalities with equality flags, the sup/L2 distances to the
/// convex reference body P_k + D, the two stability lower bounds (which
/// bound slack_thm1), and the k-independent corollary bounds against the
/// Steiner disk alone.
struct InequalityReport {
    int k = 0;
    double deficit = 0.0;                 // L^2 - 4 pi A
    double abs_area_preserving = 0.0;     // 4 pi |A_{P_k}|
    double abs_area_midpoint_term = 0.0;  // 2 pi |A_Omega|
    double slack_thm1 = 0.0;              // deficit - 4 pi |A_{P_k}|  (>= 0)
    double slack_thm2 = 0.0;              // slack_thm1 - 2 pi |A_Omega|  (>= 0)
    bool equality_thm1 = false;
    bool equality_thm2 = false;
    double d_inf = 0.0;                   // d_inf(O, P_k + D)
    double d_2 = 0.0;                     // d_2(O, P_k + D)
    double stab1_bound = 0.0;             // 8 pi^2 k / (2 pi cot(pi/k) + k) * d_inf^2
    double stab2_bound = 0.0;             // 6 pi * d_2^2
    std::pair<double, double> corollary_bounds{0.0, 0.0};
    Convexity convexity_status = Convexity::convex;
};

struct ReportOptions {
    /// Compute the coefficient formulas even outside the theorem hypotheses
    /// (nonconvex or marginal inputs) instead of raising DomainError.
    bool unchecked = false;
    /// A harmonic counts as zero for the equality flags when
    /// sqrt(a^2 + b^2) <= equality_tol * max(1, |a0|).
    double equality_tol = 1e-9;
};

/// L^2 - 4 pi A = 2 pi^2 sum_{n>=2} (n^2 - 1)(a_n^2 + b_n^2); always >= 0.
/// Defined coefficientwise for any hedgehog, meaningful for ovals.
double isoperimetric_deficit(const Hedgehog& curve);

struct TheoremCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool equality = false;
};

/// deficit >= 4 pi |A_{P_k}|. Equality iff every circumscribed equiangular
/// k-gon is regular with centroid at the Steiner point. Requires a convex
/// input unless options.unchecked.
TheoremCheck check_thm1(const Hedgehog& oval, int k, const ReportOptions& options = {});

/// deficit >= 4 pi |A_{P_k}| + 2 pi |A_Omega|. Same equality condition.
TheoremCheck check_thm2(const Hedgehog& oval, int k, const ReportOptions& options = {});

/// Hausdorff distance max_s |h_A - h_B|, located on a dense grid of
/// 4096 * max(1, degree) samples and polished by golden section to 1e-12 in
/// s. A certified upper bound (the amplitude sum of the difference) guards
/// the result; exceeding it raises NumericalError.
double d_inf(const Hedgehog& a, const Hedgehog& b);

/// L2 distance sqrt(int |h_A - h_B|^2 ds), exact by Parseval.
double d_2(const Hedgehog& a, const Hedgehog& b);

/// Right-hand sides of the two stability bounds against P_k + D:
///   stab1 = 8 pi^2 k / (2 pi cot(pi/k) + k) * d_inf^2,
///   stab2 = 6 pi * d_2^2.
/// Both are lower bounds for deficit - 4 pi |A_{P_k}|.
std::pair<double, double> stability_bounds(const Hedgehog& oval, int k,
                                           const ReportOptions& options = {});

/// k -> infinity limits of the stability bounds, against the Steiner disk:
///   ( (8/3) pi^2 d_inf(O, D)^2 , 6 pi d_2(O, D)^2 );
/// both are lower bounds for the full deficit.
std::pair<double, double> corollary_bounds(const Hedgehog& oval,
                                           const ReportOptions& options = {});

/// Populates every report field; internally consistent per the field
/// comments. Requires k >= 3; requires a convex input unless
/// options.unchecked, in which case convexity_status records the
/// classification and the coefficient formulas are reported anyway.
InequalityReport full_report(const Hedgehog& oval, int k,
                             const ReportOptions& options = {});

}  // namespace hedgehog
