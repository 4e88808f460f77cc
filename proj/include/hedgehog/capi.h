/*
 * C interface of the hedgehog shared library.
 *
 * Curves are owned through opaque handles; every function returns a status
 * code from hh_status and reports details through hh_last_error(), which is
 * thread local. Buffer-taking functions follow a two-call protocol: pass
 * capacity 0 to query the required count.
 */

#ifndef HEDGEHOG_CAPI_H
#define HEDGEHOG_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh_status {
    HH_OK = 0,
    HH_ERR_INVALID_ARGUMENT = 1, /* bad parameter, bad coefficients */
    HH_ERR_DOMAIN = 2,           /* input outside theorem hypotheses (nonconvex) */
    HH_ERR_NUMERIC = 3,          /* an internal numerical certificate failed */
    HH_ERR_BUFFER = 4            /* caller buffer too small; count holds the need */
} hh_status;

typedef struct hh_curve hh_curve; /* opaque: a support function and its curve */

typedef struct hh_harmonic {
    int n;    /* index, >= 1 */
    double a; /* cos coefficient */
    double b; /* sin coefficient */
} hh_harmonic;

typedef enum hh_convexity {
    HH_CONVEX = 0,
    HH_NONCONVEX = 1,
    HH_MARGINAL = 2
} hh_convexity;

const char* hh_version(void);
/* Message of the most recent failure on the calling thread; never NULL. */
const char* hh_last_error(void);

/* ---- curve lifetime and coefficients ---------------------------------- */

/* Builds a curve from a0 and harmonic coefficients (indices must be unique
 * and >= 1; count may be 0 with harmonics NULL). */
hh_status hh_curve_create(double a0, const hh_harmonic* harmonics, int count,
                          hh_curve** out);
void hh_curve_destroy(hh_curve* curve);

hh_status hh_curve_constant(const hh_curve* curve, double* a0);
hh_status hh_curve_degree(const hh_curve* curve, int* degree);
/* Stored harmonics in increasing index order. *count always receives the
 * total; HH_ERR_BUFFER when capacity is too small. */
hh_status hh_curve_harmonics(const hh_curve* curve, hh_harmonic* buffer,
                             int capacity, int* count);
/* d^m/ds^m h(s), m <= 4. */
hh_status hh_curve_evaluate(const hh_curve* curve, double s, int derivative_order,
                            double* value);
hh_status hh_curve_point(const hh_curve* curve, double s, double* x, double* y);

/* ---- invariants -------------------------------------------------------- */

typedef struct hh_invariants {
    double length;         /* algebraic length 2 pi a0 */
    double area;           /* oriented area */
    double average_width;  /* 2 a0 */
    double deficit;        /* length^2 - 4 pi area */
    double steiner_x;
    double steiner_y;
    double steiner_radius; /* |average width| / 2 */
    int convexity;         /* hh_convexity */
} hh_invariants;

hh_status hh_invariants_get(const hh_curve* curve, hh_invariants* out);

typedef struct hh_singular_point {
    double s;
    double x;
    double y;
    int is_cusp;
} hh_singular_point;

/* Singular points sorted by parameter; two-call protocol as above. */
hh_status hh_singular_points(const hh_curve* curve, hh_singular_point* buffer,
                             int capacity, int* count);

/* ---- derived curves ---------------------------------------------------- */

typedef enum hh_curve_set {
    HH_SET_OVAL = 0,          /* the curve itself, parameter over [0, 2pi) */
    HH_SET_PERPENDICULAR = 1, /* quarter-turn rotated copy */
    HH_SET_PRESERVING = 2,    /* preserving set of order k */
    HH_SET_MIDPOINT = 3,      /* midpoint set, parameter over [0, 2pi/k) */
    HH_SET_SYMMETRAL = 4      /* k-central symmetral */
} hh_curve_set;

/* Fills samples points of the requested derived curve at uniform parameters
 * over its natural period (endpoint excluded). k is ignored for the oval and
 * perpendicular sets; it must be >= 3 otherwise. samples >= 1. */
hh_status hh_sample_set(const hh_curve* curve, int set, int k, int samples,
                        double* s_values, double* xs, double* ys);

/* Circumscribed equiangular k-gon at base angle s: k vertices and the k feet
 * of the perpendiculars from the origin onto the edge lines. Arrays hold k
 * entries each; any of them may be NULL to skip. */
hh_status hh_polygon(const hh_curve* curve, int k, double base_angle,
                     double* vertex_xs, double* vertex_ys,
                     double* foot_xs, double* foot_ys);

/* Degeneracy flag, closed-form oriented area and sampled diameter of the
 * midpoint set. Output pointers may be NULL to skip. */
hh_status hh_midpoint_info(const hh_curve* curve, int k, int* degenerate,
                           double* oriented_area, double* diameter);

/* ---- inequality report -------------------------------------------------- */

typedef struct hh_report {
    int k;
    double deficit;
    double abs_area_preserving;    /* 4 pi |A_preserving| */
    double abs_area_midpoint_term; /* 2 pi |A_midpoint| */
    double slack_thm1;
    double slack_thm2;
    int equality_thm1;
    int equality_thm2;
    double d_inf;
    double d_2;
    double stab1_bound;
    double stab2_bound;
    double corollary_inf;
    double corollary_2;
    int convexity; /* hh_convexity */
} hh_report;

/* Full certification for one k. equality_tol <= 0 selects the default 1e-9.
 * Nonconvex input fails with HH_ERR_DOMAIN unless unchecked is nonzero. */
hh_status hh_report_compute(const hh_curve* curve, int k, int unchecked,
                            double equality_tol, hh_report* out);

/* ---- fuzzing ------------------------------------------------------------ */

typedef struct hh_fuzz_options {
    unsigned long long seed;
    int trials;     /* >= 1 */
    int max_degree; /* >= 2 */
    int k_min;      /* >= 3 */
    int k_max;      /* >= k_min */
    int jobs;       /* worker threads; result independent of this */
} hh_fuzz_options;

typedef struct hh_fuzz_report hh_fuzz_report; /* opaque */

hh_status hh_fuzz_run(const hh_fuzz_options* options, hh_fuzz_report** out);
void hh_fuzz_report_destroy(hh_fuzz_report* report);

hh_status hh_fuzz_counts(const hh_fuzz_report* report, int* trials,
                         long long* checks, long long* passed,
                         long long* violations, int* numerical_failures);

/* First violation, if any: *trial receives -1 when the run was clean.
 * check/detail receive NUL-terminated strings (truncated to the caller's
 * capacity). */
hh_status hh_fuzz_first_violation(const hh_fuzz_report* report, int* trial,
                                  int* k, char* check, int check_capacity,
                                  char* detail, int detail_capacity);

/* Greedily minimized counterexample of the first violation; two-call
 * protocol for the harmonic buffer. HH_ERR_INVALID_ARGUMENT when the run
 * was clean. */
hh_status hh_fuzz_counterexample(const hh_fuzz_report* report, double* a0,
                                 hh_harmonic* buffer, int capacity, int* count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEDGEHOG_CAPI_H */
