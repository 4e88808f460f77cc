#include "hedgehog/capi.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "hedgehog/errors.hpp"
#include "hedgehog/fuzz.hpp"
#include "hedgehog/hedgehog.hpp"
#include "hedgehog/inequality.hpp"
#include "hedgehog/midpoint.hpp"
#include "hedgehog/preserving.hpp"

using namespace hedgehog;

struct hh_curve {
    Hedgehog curve;
};

struct hh_fuzz_report {
    fuzz::Result result;
};

namespace {

thread_local std::string g_last_error = "ok";

hh_status fail(hh_status code, const char* message) {
    g_last_error = message;
    return code;
}

/// Runs the body, translating exceptions into status codes.
template <typename Fn>
hh_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(HH_ERR_INVALID_ARGUMENT, e.what());
    } catch (const DomainError& e) {
        return fail(HH_ERR_DOMAIN, e.what());
    } catch (const NumericalError& e) {
        return fail(HH_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HH_ERR_INVALID_ARGUMENT, "out of memory");
    } catch (const std::exception& e) {
        return fail(HH_ERR_NUMERIC, e.what());
    }
}

hh_status require(bool condition, const char* message) {
    return condition ? HH_OK : fail(HH_ERR_INVALID_ARGUMENT, message);
}

int to_int(Convexity c) {
    switch (c) {
        case Convexity::convex: return HH_CONVEX;
        case Convexity::nonconvex: return HH_NONCONVEX;
        default: return HH_MARGINAL;
    }
}

void copy_string(const std::string& text, char* buffer, int capacity) {
    if (buffer == nullptr || capacity <= 0) return;
    const int n = std::min<int>(capacity - 1, int(text.size()));
    std::memcpy(buffer, text.data(), n);
    buffer[n] = '\0';
}

}  // namespace

extern "C" {

const char* hh_version(void) { return "1.0.0"; }

const char* hh_last_error(void) { return g_last_error.c_str(); }

hh_status hh_curve_create(double a0, const hh_harmonic* harmonics, int count,
                          hh_curve** out) {
    if (hh_status s = require(out != nullptr, "out must not be NULL"); s != HH_OK) return s;
    if (hh_status s = require(count >= 0 && (count == 0 || harmonics != nullptr),
                              "harmonics must not be NULL when count > 0");
        s != HH_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        std::vector<Harmonic> terms;
        terms.reserve(count);
        for (int i = 0; i < count; ++i)
            terms.push_back({harmonics[i].n, harmonics[i].a, harmonics[i].b});
        *out = new hh_curve{Hedgehog(TrigPoly(a0, std::move(terms)))};
        return HH_OK;
    });
}

void hh_curve_destroy(hh_curve* curve) { delete curve; }

hh_status hh_curve_constant(const hh_curve* curve, double* a0) {
    if (hh_status s = require(curve && a0, "NULL argument"); s != HH_OK) return s;
    *a0 = curve->curve.support().constant();
    return HH_OK;
}

hh_status hh_curve_degree(const hh_curve* curve, int* degree) {
    if (hh_status s = require(curve && degree, "NULL argument"); s != HH_OK) return s;
    *degree = curve->curve.support().degree();
    return HH_OK;
}

hh_status hh_curve_harmonics(const hh_curve* curve, hh_harmonic* buffer,
                             int capacity, int* count) {
    if (hh_status s = require(curve && count, "NULL argument"); s != HH_OK) return s;
    const auto& harmonics = curve->curve.support().harmonics();
    *count = int(harmonics.size());
    if (capacity < *count)
        return fail(HH_ERR_BUFFER, "harmonic buffer too small");
    for (int i = 0; i < *count; ++i)
        buffer[i] = {harmonics[i].n, harmonics[i].a, harmonics[i].b};
    return HH_OK;
}

hh_status hh_curve_evaluate(const hh_curve* curve, double s, int derivative_order,
                            double* value) {
    if (hh_status st = require(curve && value, "NULL argument"); st != HH_OK) return st;
    return guarded([&] {
        *value = curve->curve.support().evaluate(s, derivative_order);
        return HH_OK;
    });
}

hh_status hh_curve_point(const hh_curve* curve, double s, double* x, double* y) {
    if (hh_status st = require(curve && x && y, "NULL argument"); st != HH_OK) return st;
    const Point2 p = curve->curve.point_at(s);
    *x = p.x;
    *y = p.y;
    return HH_OK;
}

hh_status hh_invariants_get(const hh_curve* curve, hh_invariants* out) {
    if (hh_status s = require(curve && out, "NULL argument"); s != HH_OK) return s;
    return guarded([&] {
        const Hedgehog& h = curve->curve;
        const SteinerDisk disk = h.steiner_disk();
        out->length = h.algebraic_length();
        out->area = h.oriented_area();
        out->average_width = h.average_width();
        out->deficit = isoperimetric_deficit(h);
        out->steiner_x = disk.center.x;
        out->steiner_y = disk.center.y;
        out->steiner_radius = disk.radius;
        out->convexity = to_int(h.convexity());
        return HH_OK;
    });
}

hh_status hh_singular_points(const hh_curve* curve, hh_singular_point* buffer,
                             int capacity, int* count) {
    if (hh_status s = require(curve && count, "NULL argument"); s != HH_OK) return s;
    return guarded([&] {
        const std::vector<SingularPoint> points = curve->curve.singular_points();
        *count = int(points.size());
        if (capacity < *count)
            return fail(HH_ERR_BUFFER, "singular point buffer too small");
        for (int i = 0; i < *count; ++i)
            buffer[i] = {points[i].s, points[i].location.x, points[i].location.y,
                         points[i].is_cusp ? 1 : 0};
        return HH_OK;
    });
}

hh_status hh_sample_set(const hh_curve* curve, int set, int k, int samples,
                        double* s_values, double* xs, double* ys) {
    if (hh_status st = require(curve && s_values && xs && ys, "NULL argument"); st != HH_OK)
        return st;
    if (hh_status st = require(samples >= 1, "samples must be >= 1"); st != HH_OK) return st;
    return guarded([&]() -> hh_status {
        const Hedgehog& h = curve->curve;
        auto fill = [&](const std::function<Point2(double)>& at, double period) {
            for (int i = 0; i < samples; ++i) {
                const double s = period * i / samples;
                const Point2 p = at(s);
                s_values[i] = s;
                xs[i] = p.x;
                ys[i] = p.y;
            }
        };
        switch (set) {
            case HH_SET_OVAL:
                fill([&h](double s) { return h.point_at(s); }, kTwoPi);
                return HH_OK;
            case HH_SET_PERPENDICULAR:
                fill([&h](double s) { return h.perp_point_at(s); }, kTwoPi);
                return HH_OK;
            case HH_SET_PRESERVING: {
                const PreservingSet p(h, k);
                fill([&p](double s) { return p.point_at(s); }, kTwoPi);
                return HH_OK;
            }
            case HH_SET_MIDPOINT: {
                const MidpointSet m(h, k);
                const std::vector<Point2> pts = m.sample(samples);
                for (int i = 0; i < samples; ++i) {
                    s_values[i] = m.period() * i / samples;
                    xs[i] = pts[i].x;
                    ys[i] = pts[i].y;
                }
                return HH_OK;
            }
            case HH_SET_SYMMETRAL: {
                const Hedgehog sym = k_central_symmetral(h, k);
                fill([&sym](double s) { return sym.point_at(s); }, kTwoPi);
                return HH_OK;
            }
            default:
                return fail(HH_ERR_INVALID_ARGUMENT, "unknown curve set");
        }
    });
}

hh_status hh_polygon(const hh_curve* curve, int k, double base_angle,
                     double* vertex_xs, double* vertex_ys,
                     double* foot_xs, double* foot_ys) {
    if (hh_status st = require(curve != nullptr, "NULL argument"); st != HH_OK) return st;
    return guarded([&] {
        const CircumscribedPolygon poly =
            circumscribed_polygon(curve->curve, k, base_angle);
        for (int i = 0; i < k; ++i) {
            if (vertex_xs) vertex_xs[i] = poly.vertices[i].x;
            if (vertex_ys) vertex_ys[i] = poly.vertices[i].y;
            if (foot_xs) foot_xs[i] = poly.foot_points[i].x;
            if (foot_ys) foot_ys[i] = poly.foot_points[i].y;
        }
        return HH_OK;
    });
}

hh_status hh_midpoint_info(const hh_curve* curve, int k, int* degenerate,
                           double* oriented_area, double* diameter) {
    if (hh_status st = require(curve != nullptr, "NULL argument"); st != HH_OK) return st;
    return guarded([&] {
        const Hedgehog& h = curve->curve;
        if (degenerate) *degenerate = midpoint_is_degenerate(h, k) ? 1 : 0;
        if (oriented_area) *oriented_area = midpoint_oriented_area(h, k);
        if (diameter) *diameter = MidpointSet(h, k).diameter();
        return HH_OK;
    });
}

hh_status hh_report_compute(const hh_curve* curve, int k, int unchecked,
                            double equality_tol, hh_report* out) {
    if (hh_status st = require(curve && out, "NULL argument"); st != HH_OK) return st;
    return guarded([&] {
        ReportOptions options;
        options.unchecked = unchecked != 0;
        if (equality_tol > 0.0) options.equality_tol = equality_tol;
        const InequalityReport report = full_report(curve->curve, k, options);
        out->k = report.k;
        out->deficit = report.deficit;
        out->abs_area_preserving = report.abs_area_preserving;
        out->abs_area_midpoint_term = report.abs_area_midpoint_term;
        out->slack_thm1 = report.slack_thm1;
        out->slack_thm2 = report.slack_thm2;
        out->equality_thm1 = report.equality_thm1 ? 1 : 0;
        out->equality_thm2 = report.equality_thm2 ? 1 : 0;
        out->d_inf = report.d_inf;
        out->d_2 = report.d_2;
        out->stab1_bound = report.stab1_bound;
        out->stab2_bound = report.stab2_bound;
        out->corollary_inf = report.corollary_bounds.first;
        out->corollary_2 = report.corollary_bounds.second;
        out->convexity = to_int(report.convexity_status);
        return HH_OK;
    });
}

hh_status hh_fuzz_run(const hh_fuzz_options* options, hh_fuzz_report** out) {
    if (hh_status st = require(options && out, "NULL argument"); st != HH_OK) return st;
    *out = nullptr;
    return guarded([&] {
        fuzz::Options opts;
        opts.seed = options->seed;
        opts.trials = options->trials;
        opts.max_degree = options->max_degree;
        opts.k_min = options->k_min;
        opts.k_max = options->k_max;
        opts.jobs = options->jobs;
        *out = new hh_fuzz_report{fuzz::run(opts)};
        return HH_OK;
    });
}

void hh_fuzz_report_destroy(hh_fuzz_report* report) { delete report; }

hh_status hh_fuzz_counts(const hh_fuzz_report* report, int* trials,
                         long long* checks, long long* passed,
                         long long* violations, int* numerical_failures) {
    if (hh_status st = require(report != nullptr, "NULL argument"); st != HH_OK) return st;
    if (trials) *trials = report->result.trials;
    if (checks) *checks = report->result.checks;
    if (passed) *passed = report->result.passed;
    if (violations) *violations = report->result.violations;
    if (numerical_failures) *numerical_failures = report->result.numerical_failures;
    return HH_OK;
}

hh_status hh_fuzz_first_violation(const hh_fuzz_report* report, int* trial,
                                  int* k, char* check, int check_capacity,
                                  char* detail, int detail_capacity) {
    if (hh_status st = require(report && trial, "NULL argument"); st != HH_OK) return st;
    if (!report->result.first) {
        *trial = -1;
        copy_string("", check, check_capacity);
        copy_string("", detail, detail_capacity);
        return HH_OK;
    }
    const fuzz::Violation& v = *report->result.first;
    *trial = v.trial;
    if (k) *k = v.k;
    copy_string(v.check, check, check_capacity);
    copy_string(v.detail, detail, detail_capacity);
    return HH_OK;
}

hh_status hh_fuzz_counterexample(const hh_fuzz_report* report, double* a0,
                                 hh_harmonic* buffer, int capacity, int* count) {
    if (hh_status st = require(report && a0 && count, "NULL argument"); st != HH_OK)
        return st;
    if (!report->result.first)
        return fail(HH_ERR_INVALID_ARGUMENT, "the fuzz run had no violations");
    const TrigPoly& minimized = report->result.first->minimized;
    *a0 = minimized.constant();
    *count = int(minimized.harmonics().size());
    if (capacity < *count) return fail(HH_ERR_BUFFER, "harmonic buffer too small");
    for (int i = 0; i < *count; ++i) {
        const Harmonic& t = minimized.harmonics()[i];
        buffer[i] = {t.n, t.a, t.b};
    }
    return HH_OK;
}

}  // extern "C"
