// Command-line front end: describe / check / render / fuzz. Talks to the
// library exclusively through the C interface in hedgehog/capi.h.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expr_parse.hpp"
#include "hedgehog/capi.h"
#include "pi_format.hpp"
#include "svg_write.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNumerical = 3;

struct CurveInput {
    double a0 = 0.0;
    std::vector<hh_harmonic> harmonics;
    std::string label;
};

struct CurveHandle {
    hh_curve* ptr = nullptr;
    ~CurveHandle() { hh_curve_destroy(ptr); }
};

struct InputError {
    std::string message;
};

int exit_for(hh_status status) {
    switch (status) {
        case HH_OK: return kExitOk;
        case HH_ERR_NUMERIC: return kExitNumerical;
        default: return kExitInput;
    }
}

CurveInput parse_curve_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError{"cannot open input file: " + path};
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError{"JSON parse error in " + path + ": " + e.what()};
    }
    if (!doc.is_object()) throw InputError{path + ": top-level value must be an object"};
    if (!doc.contains("a0") || !doc["a0"].is_number())
        throw InputError{path + ": field \"a0\" must be a number"};
    CurveInput input;
    input.a0 = doc["a0"].get<double>();
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            throw InputError{path + ": field \"label\" must be a string"};
        input.label = doc["label"].get<std::string>();
    }
    if (doc.contains("harmonics")) {
        if (!doc["harmonics"].is_array())
            throw InputError{path + ": field \"harmonics\" must be an array"};
        std::set<int> seen;
        int index = 0;
        for (const json& term : doc["harmonics"]) {
            const std::string where = "harmonics[" + std::to_string(index++) + "]";
            if (!term.is_object()) throw InputError{path + ": " + where + " must be an object"};
            if (!term.contains("n") || !term["n"].is_number_integer())
                throw InputError{path + ": " + where + ".n must be an integer"};
            const int n = term["n"].get<int>();
            if (n < 1) throw InputError{path + ": " + where + ".n must be >= 1"};
            if (!seen.insert(n).second)
                throw InputError{path + ": duplicate harmonic index n = " + std::to_string(n)};
            double a = 0.0, b = 0.0;
            if (term.contains("a")) {
                if (!term["a"].is_number())
                    throw InputError{path + ": " + where + ".a must be a number"};
                a = term["a"].get<double>();
            }
            if (term.contains("b")) {
                if (!term["b"].is_number())
                    throw InputError{path + ": " + where + ".b must be a number"};
                b = term["b"].get<double>();
            }
            input.harmonics.push_back({n, a, b});
        }
    }
    return input;
}

CurveInput load_curve(const std::string& input_path, const std::string& expr) {
    if (!expr.empty()) {
        CurveInput input;
        cli::ExprParser parser(expr);
        if (auto error = parser.parse(input.a0, input.harmonics)) throw InputError{*error};
        return input;
    }
    return parse_curve_json(input_path);
}

hh_status make_curve(const CurveInput& input, CurveHandle& handle) {
    return hh_curve_create(input.a0,
                           input.harmonics.empty() ? nullptr : input.harmonics.data(),
                           int(input.harmonics.size()), &handle.ptr);
}

json curve_to_json(const CurveInput& input) {
    json harmonics = json::array();
    for (const hh_harmonic& t : input.harmonics)
        harmonics.push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
    json out = {{"a0", input.a0}, {"harmonics", harmonics}};
    if (!input.label.empty()) out["label"] = input.label;
    return out;
}

const char* convexity_name(int value) {
    switch (value) {
        case HH_CONVEX: return "convex";
        case HH_NONCONVEX: return "nonconvex";
        default: return "marginal";
    }
}

double equality_tol_from_env() {
    const char* raw = std::getenv("HEDGEHOG_TOL");
    if (raw == nullptr || *raw == '\0') return -1.0;  // library default
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value > 0.0))
        throw InputError{std::string("HEDGEHOG_TOL must be a positive decimal, got \"") +
                         raw + "\""};
    return value;
}

json symbolic_block(std::initializer_list<std::pair<const char*, double>> fields) {
    json block = json::object();
    for (const auto& [name, value] : fields)
        if (const auto form = cli::pi_rational_form(value)) block[name] = *form;
    return block;
}

// ---- describe ------------------------------------------------------------

int run_describe(const CurveInput& input, bool as_json) {
    CurveHandle curve;
    if (hh_status s = make_curve(input, curve); s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }
    hh_invariants inv{};
    if (hh_status s = hh_invariants_get(curve.ptr, &inv); s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }
    int count = 0;
    hh_status probe = hh_singular_points(curve.ptr, nullptr, 0, &count);
    if (probe != HH_OK && probe != HH_ERR_BUFFER) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(probe);
    }
    std::vector<hh_singular_point> singular(count);
    if (count > 0) {
        if (hh_status s = hh_singular_points(curve.ptr, singular.data(), count, &count);
            s != HH_OK) {
            std::cerr << "error: " << hh_last_error() << "\n";
            return exit_for(s);
        }
    }
    int degree = 0;
    hh_curve_degree(curve.ptr, &degree);

    if (as_json) {
        json points = json::array();
        for (const auto& p : singular)
            points.push_back(
                {{"s", p.s}, {"x", p.x}, {"y", p.y}, {"is_cusp", p.is_cusp != 0}});
        json doc = {{"curve", curve_to_json(input)},
                    {"degree", degree},
                    {"length", inv.length},
                    {"area", inv.area},
                    {"average_width", inv.average_width},
                    {"steiner_point", {inv.steiner_x, inv.steiner_y}},
                    {"steiner_radius", inv.steiner_radius},
                    {"convexity", convexity_name(inv.convexity)},
                    {"deficit", inv.deficit},
                    {"singular_points", points},
                    {"symbolic", symbolic_block({{"length", inv.length},
                                                 {"area", inv.area},
                                                 {"deficit", inv.deficit}})}};
        std::cout << doc.dump(2) << "\n";
        return kExitOk;
    }

    if (!input.label.empty()) std::cout << "label           " << input.label << "\n";
    std::cout << "degree          " << degree << "\n";
    std::cout << "length          " << cli::annotated(inv.length) << "\n";
    std::cout << "area            " << cli::annotated(inv.area) << "\n";
    std::cout << "average width   " << cli::annotated(inv.average_width) << "\n";
    std::cout << "steiner point   (" << cli::num15(inv.steiner_x) << ", "
              << cli::num15(inv.steiner_y) << ")\n";
    std::cout << "steiner radius  " << cli::num15(inv.steiner_radius) << "\n";
    std::cout << "convexity       " << convexity_name(inv.convexity) << "\n";
    std::cout << "deficit         " << cli::annotated(inv.deficit) << "\n";
    if (singular.empty()) {
        std::cout << "singular points none\n";
    } else {
        std::cout << "singular points " << singular.size() << "\n";
        for (const auto& p : singular)
            std::cout << "  s=" << cli::num15(p.s) << "  (" << cli::num15(p.x) << ", "
                      << cli::num15(p.y) << ")" << (p.is_cusp ? "  cusp" : "") << "\n";
    }
    return kExitOk;
}

// ---- check ----------------------------------------------------------------

int run_check(const CurveInput& input, int k, bool unchecked, bool as_json) {
    CurveHandle curve;
    if (hh_status s = make_curve(input, curve); s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }
    hh_report report{};
    const double tol = equality_tol_from_env();
    if (hh_status s = hh_report_compute(curve.ptr, k, unchecked ? 1 : 0, tol, &report);
        s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }

    // report-level consistency: a failure here is a library bug or a
    // numerical breakdown, not an input problem
    const double scale = 1e-9 * std::max(1.0, report.deficit);
    const bool invariants_ok =
        report.slack_thm1 >= -scale && report.slack_thm2 >= -scale &&
        report.stab1_bound <= report.slack_thm1 + scale &&
        report.stab2_bound <= report.slack_thm1 + scale;

    if (as_json) {
        json doc = {{"k", report.k},
                    {"convexity", convexity_name(report.convexity)},
                    {"deficit", report.deficit},
                    {"abs_area_preserving", report.abs_area_preserving},
                    {"abs_area_midpoint_term", report.abs_area_midpoint_term},
                    {"slack_thm1", report.slack_thm1},
                    {"slack_thm2", report.slack_thm2},
                    {"equality_thm1", report.equality_thm1 != 0},
                    {"equality_thm2", report.equality_thm2 != 0},
                    {"d_inf", report.d_inf},
                    {"d_2", report.d_2},
                    {"stab1_bound", report.stab1_bound},
                    {"stab2_bound", report.stab2_bound},
                    {"corollary_bound_inf", report.corollary_inf},
                    {"corollary_bound_2", report.corollary_2},
                    {"invariants_ok", invariants_ok},
                    {"symbolic", symbolic_block({{"deficit", report.deficit},
                                                 {"slack_thm1", report.slack_thm1},
                                                 {"slack_thm2", report.slack_thm2},
                                                 {"d_inf", report.d_inf},
                                                 {"stab2_bound", report.stab2_bound}})}};
        if (!input.label.empty()) doc["label"] = input.label;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (!input.label.empty()) std::cout << "label                  " << input.label << "\n";
        std::cout << "k                      " << report.k << "\n";
        std::cout << "convexity              " << convexity_name(report.convexity) << "\n";
        std::cout << "deficit                " << cli::annotated(report.deficit) << "\n";
        std::cout << "4pi|A_preserving|      " << cli::annotated(report.abs_area_preserving)
                  << "\n";
        std::cout << "2pi|A_midpoint|        " << cli::annotated(report.abs_area_midpoint_term)
                  << "\n";
        std::cout << "slack (1st inequality) " << cli::annotated(report.slack_thm1) << "\n";
        std::cout << "slack (2nd inequality) " << cli::annotated(report.slack_thm2) << "\n";
        std::cout << "equality (1st)         " << (report.equality_thm1 ? "yes" : "no") << "\n";
        std::cout << "equality (2nd)         " << (report.equality_thm2 ? "yes" : "no") << "\n";
        std::cout << "d_inf to reference     " << cli::annotated(report.d_inf) << "\n";
        std::cout << "d_2 to reference       " << cli::annotated(report.d_2) << "\n";
        std::cout << "stability bound (sup)  " << cli::annotated(report.stab1_bound) << "\n";
        std::cout << "stability bound (L2)   " << cli::annotated(report.stab2_bound) << "\n";
        std::cout << "corollary bound (sup)  " << cli::annotated(report.corollary_inf) << "\n";
        std::cout << "corollary bound (L2)   " << cli::annotated(report.corollary_2) << "\n";
        std::cout << "invariants             " << (invariants_ok ? "ok" : "VIOLATED") << "\n";
    }
    return invariants_ok ? kExitOk : kExitViolation;
}

// ---- render ----------------------------------------------------------------

struct SetStyle {
    int id;
    const char* color;
    bool dashed;
};

const std::map<std::string, SetStyle>& curve_set_styles() {
    static const std::map<std::string, SetStyle> styles = {
        {"oval", {HH_SET_OVAL, "#1f77b4", false}},
        {"perpendicular", {HH_SET_PERPENDICULAR, "#9467bd", true}},
        {"preserving", {HH_SET_PRESERVING, "#ff7f0e", false}},
        {"midpoint", {HH_SET_MIDPOINT, "#2ca02c", false}},
        {"symmetral", {HH_SET_SYMMETRAL, "#8c564b", true}},
    };
    return styles;
}

int run_render(const CurveInput& input, int k, const std::string& sets_arg, int samples,
               double polygon_angle, const std::string& out_path,
               const std::string& csv_path) {
    std::vector<std::string> sets;
    std::string token;
    for (char c : sets_arg + ",") {
        if (c == ',') {
            if (!token.empty()) sets.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    if (sets.empty()) {
        std::cerr << "error: --sets must name at least one set\n";
        return kExitInput;
    }
    for (const std::string& name : sets) {
        if (curve_set_styles().count(name) == 0 && name != "polygon" &&
            name != "steiner_disk") {
            std::cerr << "error: unknown set \"" << name << "\"\n";
            return kExitInput;
        }
    }

    CurveHandle curve;
    if (hh_status s = make_curve(input, curve); s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }

    cli::SvgDoc svg;
    std::string csv = "set,s,x,y\n";
    char row[160];
    auto add_csv = [&csv, &row](const char* set, double s, double x, double y) {
        std::snprintf(row, sizeof row, "%s,%.15g,%.15g,%.15g\n", set, s, x, y);
        csv += row;
    };

    std::vector<double> s_values(samples), xs(samples), ys(samples);
    for (const std::string& name : sets) {
        if (name == "polygon") {
            std::vector<double> vx(k), vy(k), fx(k), fy(k);
            if (hh_status s = hh_polygon(curve.ptr, k, polygon_angle, vx.data(), vy.data(),
                                         fx.data(), fy.data());
                s != HH_OK) {
                std::cerr << "error: " << hh_last_error() << "\n";
                return exit_for(s);
            }
            cli::SvgPath path{"polygon", {}, "#d62728", true, false};
            for (int i = 0; i < k; ++i) path.points.emplace_back(vx[i], vy[i]);
            svg.add_path(std::move(path));
            cli::SvgMarkers feet{"polygon feet", {}, "#d62728"};
            for (int i = 0; i < k; ++i) feet.points.emplace_back(fx[i], fy[i]);
            svg.add_markers(std::move(feet));
            for (int i = 0; i < k; ++i)
                add_csv("polygon", polygon_angle + cli::kPi * 2.0 * (i + 1) / k, vx[i], vy[i]);
            continue;
        }
        if (name == "steiner_disk") {
            hh_invariants inv{};
            if (hh_status s = hh_invariants_get(curve.ptr, &inv); s != HH_OK) {
                std::cerr << "error: " << hh_last_error() << "\n";
                return exit_for(s);
            }
            svg.add_circle({"steiner disk", inv.steiner_x, inv.steiner_y,
                            inv.steiner_radius, "#7f7f7f"});
            for (int i = 0; i < samples; ++i) {
                const double s = 2.0 * cli::kPi * i / samples;
                add_csv("steiner_disk", s, inv.steiner_x + inv.steiner_radius * std::cos(s),
                        inv.steiner_y + inv.steiner_radius * std::sin(s));
            }
            continue;
        }
        const SetStyle& style = curve_set_styles().at(name);
        if (hh_status s = hh_sample_set(curve.ptr, style.id, k, samples, s_values.data(),
                                        xs.data(), ys.data());
            s != HH_OK) {
            std::cerr << "error: " << hh_last_error() << "\n";
            return exit_for(s);
        }
        cli::SvgPath path{name, {}, style.color, true, style.dashed};
        for (int i = 0; i < samples; ++i) {
            path.points.emplace_back(xs[i], ys[i]);
            add_csv(name.c_str(), s_values[i], xs[i], ys[i]);
        }
        svg.add_path(std::move(path));
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInput;
    }
    svg.write(out);
    out.close();
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitInput;
    }

    if (!csv_path.empty()) {
        std::ofstream csv_out(csv_path, std::ios::binary);
        if (!csv_out) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return kExitInput;
        }
        csv_out << csv;
        csv_out.close();
        if (!csv_out) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return kExitInput;
        }
    }
    return kExitOk;
}

// ---- fuzz -------------------------------------------------------------------

int run_fuzz(unsigned long long seed, int trials, int max_degree,
             const std::string& k_range, int jobs) {
    int k_min = 0, k_max = 0;
    const auto dots = k_range.find("..");
    try {
        if (dots == std::string::npos) {
            k_min = k_max = std::stoi(k_range);
        } else {
            k_min = std::stoi(k_range.substr(0, dots));
            k_max = std::stoi(k_range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "error: --k expects MIN..MAX, e.g. 3..8\n";
        return kExitInput;
    }

    hh_fuzz_options options{};
    options.seed = seed;
    options.trials = trials;
    options.max_degree = max_degree;
    options.k_min = k_min;
    options.k_max = k_max;
    options.jobs = jobs;

    hh_fuzz_report* report = nullptr;
    if (hh_status s = hh_fuzz_run(&options, &report); s != HH_OK) {
        std::cerr << "error: " << hh_last_error() << "\n";
        return exit_for(s);
    }
    std::unique_ptr<hh_fuzz_report, void (*)(hh_fuzz_report*)> guard(report,
                                                                     hh_fuzz_report_destroy);

    int ran = 0, numerical = 0;
    long long checks = 0, passed = 0, violations = 0;
    hh_fuzz_counts(report, &ran, &checks, &passed, &violations, &numerical);

    std::cout << "fuzz: seed=" << seed << " trials=" << ran << " max-degree=" << max_degree
              << " k=" << k_min << ".." << k_max << "\n";
    std::cout << "checks: " << checks << "  passed: " << passed
              << "  violations: " << violations << "  numerical-failures: " << numerical
              << "\n";

    if (violations > 0) {
        int trial = -1, k = 0;
        char check[128] = {0};
        char detail[512] = {0};
        hh_fuzz_first_violation(report, &trial, &k, check, sizeof check, detail,
                                sizeof detail);
        std::cout << "first violation: trial=" << trial << " k=" << k << " check=" << check
                  << "\n";
        std::cout << "detail: " << detail << "\n";

        double a0 = 0.0;
        int count = 0;
        hh_fuzz_counterexample(report, &a0, nullptr, 0, &count);
        std::vector<hh_harmonic> harmonics(count);
        if (count > 0)
            hh_fuzz_counterexample(report, &a0, harmonics.data(), count, &count);
        json terms = json::array();
        for (const hh_harmonic& t : harmonics)
            terms.push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
        std::cout << "minimized counterexample: "
                  << json{{"a0", a0}, {"harmonics", terms}}.dump() << "\n";
        std::cout << "result: VIOLATIONS\n";
        return kExitViolation;
    }
    if (numerical > 0) {
        std::cout << "result: NUMERICAL-FAILURE\n";
        return kExitNumerical;
    }
    std::cout << "result: PASS\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar hedgehog toolkit: invariants, preserving and midpoint sets, "
                 "isoperimetric certification"};
    app.require_subcommand(1);

    std::string input_path, expr;
    auto add_curve_options = [&](CLI::App* cmd) {
        auto* input_opt = cmd->add_option("--input", input_path,
                                          "curve as a JSON file {a0, harmonics[], label?}");
        auto* expr_opt =
            cmd->add_option("--expr", expr, "curve as an expression, e.g. \"137 + 21*cos(2s)\"");
        input_opt->excludes(expr_opt);
    };

    // describe
    auto* describe = app.add_subcommand("describe", "print the classical invariants");
    bool describe_json = false;
    add_curve_options(describe);
    describe->add_flag("--json", describe_json, "machine-readable output");

    // check
    auto* check = app.add_subcommand("check", "certify the isoperimetric-type inequalities");
    int check_k = 0;
    bool check_unchecked = false, check_json = false;
    add_curve_options(check);
    check->add_option("--k", check_k, "order of the preserving/midpoint sets (>= 3)")
        ->required();
    check->add_flag("--unchecked", check_unchecked,
                    "compute the coefficient formulas even outside the theorem hypotheses");
    check->add_flag("--json", check_json, "machine-readable output");

    // render
    auto* render = app.add_subcommand("render", "write an SVG (and optional CSV) of curve sets");
    int render_k = 3, render_samples = 1024;
    double polygon_angle = 0.0;
    std::string sets_arg, out_path, csv_path;
    add_curve_options(render);
    render->add_option("--k", render_k, "order for the k-dependent sets")->required();
    render
        ->add_option("--sets", sets_arg,
                     "comma list from {oval, perpendicular, preserving, midpoint, "
                     "symmetral, polygon, steiner_disk}")
        ->required();
    render->add_option("--samples", render_samples, "sample count per curve (>= 64)");
    render->add_option("--polygon-angle", polygon_angle,
                       "base angle of the circumscribed polygon, radians");
    render->add_option("-o,--output", out_path, "output SVG path")->required();
    render->add_option("--csv", csv_path, "also write set,s,x,y samples as CSV");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "randomized self-test of the whole library");
    unsigned long long seed = 42;
    int trials = 0, max_degree = 12, jobs = 1;
    std::string k_range = "3..8";
    fuzz->add_option("--seed", seed, "generator seed");
    fuzz->add_option("--trials", trials, "number of random curves")->required();
    fuzz->add_option("--max-degree", max_degree, "largest harmonic index of the inputs");
    fuzz->add_option("--k", k_range, "order range MIN..MAX");
    fuzz->add_option("--jobs", jobs, "worker threads (the result does not depend on this)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (describe->parsed() || check->parsed() || render->parsed()) {
            if (input_path.empty() && expr.empty())
                throw InputError{"one of --input or --expr is required"};
            const CurveInput input = load_curve(input_path, expr);
            if (describe->parsed()) return run_describe(input, describe_json);
            if (check->parsed()) return run_check(input, check_k, check_unchecked, check_json);
            if (render_samples < 64) throw InputError{"--samples must be >= 64"};
            return run_render(input, render_k, sets_arg, render_samples, polygon_angle,
                              out_path, csv_path);
        }
        if (fuzz->parsed()) {
            if (trials < 1) throw InputError{"--trials must be >= 1"};
            return run_fuzz(seed, trials, max_degree, k_range, jobs);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitInput;
    }
    return kExitInput;
}
