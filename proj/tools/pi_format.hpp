#pragma once

// Detects values that are rational multiples of pi or pi^2 (and plain
// rationals with a small denominator) and renders them symbolically, e.g.
// 860.796... -> "274*pi". Reconstruction runs over continued-fraction
// convergents with denominators up to 1e6.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

namespace cli {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Rational {
    long long p = 0;
    long long q = 1;
};

inline std::optional<Rational> reconstruct_rational(long double x, long long max_den) {
    if (!std::isfinite(double(x)) || std::abs(double(x)) > 1e12) return std::nullopt;
    // A convergent p/q of a generic real only achieves |x - p/q| ~ 1/q^2;
    // demand a fit orders of magnitude better than that before calling the
    // value rational (round-off of a genuine closed form sits near 1e-15
    // relative). Errors are measured in long double so that a convergent
    // merely hitting the stored double exactly cannot fake a perfect fit.
    const long double scale = std::max(1.0L, std::abs(x));
    auto accepted = [x, scale](long long p, long long q) {
        const long double err = std::abs(x - (long double)(p) / (long double)(q));
        return err <= 1e-12L * scale && err * q * q <= 1e-7L * scale;
    };
    long long p_prev = 1, q_prev = 0;
    long long p_cur = (long long)std::llround(std::floor(double(x)));
    long long q_cur = 1;
    long double frac = x - std::floor((long double)x);
    for (int iter = 0; iter < 64; ++iter) {
        if (accepted(p_cur, q_cur)) return Rational{p_cur, q_cur};
        if (frac < 1e-18L) break;
        const long double inv = 1.0L / frac;
        const long long a = (long long)std::llround(std::floor(double(inv)));
        frac = inv - std::floor(inv);
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        if (q_next > max_den || q_next <= 0) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return std::nullopt;
}

/// Symbolic form "p/q*pi^m" when value is a small-denominator rational times
/// a power of pi (m = 1, 2), or a noninteger rational (m = 0).
inline std::optional<std::string> pi_rational_form(double value) {
    if (value == 0.0 || !std::isfinite(value)) return std::nullopt;
    constexpr long double pi_l = 3.14159265358979323846264338327950288L;
    for (int power = 2; power >= 0; --power) {
        long double scaled = value;
        for (int m = 0; m < power; ++m) scaled /= pi_l;
        const auto rational = reconstruct_rational(scaled, 10000);
        if (!rational) continue;
        if (power == 0 && rational->q == 1) return std::nullopt;  // plain integer
        char buffer[96];
        const char* pi_part = power == 2 ? "*pi^2" : (power == 1 ? "*pi" : "");
        if (rational->q == 1)
            std::snprintf(buffer, sizeof buffer, "%lld%s", rational->p, pi_part);
        else
            std::snprintf(buffer, sizeof buffer, "%lld/%lld%s", rational->p, rational->q,
                          pi_part);
        return std::string(buffer);
    }
    return std::nullopt;
}

/// 15 significant digits, used for all numeric CLI output.
inline std::string num15(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.15g", value);
    return buffer;
}

/// "<decimal> (= <symbolic>)" when a symbolic form exists.
inline std::string annotated(double value) {
    std::string out = num15(value);
    if (const auto symbolic = pi_rational_form(value)) out += " (= " + *symbolic + ")";
    return out;
}

}  // namespace cli
