#pragma once

#include <functional>
#include <vector>

namespace hedgehog {

/// One Fourier mode a*cos(n s) + b*sin(n s), index n >= 1.
struct Harmonic {
    int n = 1;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// Truncated trigonometric polynomial
///
///     f(s) = a0 + sum_n ( a_n cos(n s) + b_n sin(n s) ).
///
/// Canonical form: indices are unique and strictly increasing, and harmonics
/// whose coefficients are both exactly zero are dropped (no tolerance-based
/// zeroing happens here; tolerance policy belongs to the consumers).
/// Instances are immutable values and every operation is pure.
class TrigPoly {
  public:
    TrigPoly() = default;
    explicit TrigPoly(double constant);
    TrigPoly(double constant, std::vector<Harmonic> harmonics);

    double constant() const { return a0_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }

    /// Largest stored index, 0 when no harmonics survive canonicalization.
    int degree() const;
    bool is_zero() const { return a0_ == 0.0 && harmonics_.empty(); }

    /// Coefficients (a_n, b_n) of index n ((a0, 0) for n = 0).
    std::pair<double, double> coefficient(int n) const;

    /// d^m/ds^m f(s) by term-wise differentiation; m <= 4.
    double evaluate(double s, int derivative_order = 0) const;

    /// Coefficients of s -> f(s + alpha).
    TrigPoly phase_shift(double alpha) const;

    /// Keeps exactly the harmonics whose index satisfies the predicate;
    /// the constant term survives iff keep_constant.
    TrigPoly filter_indices(const std::function<bool(int)>& predicate,
                            bool keep_constant) const;

    /// A_k[f](s) = (1/k) sum_j f(s + 2 pi j / k): keeps the constant term and
    /// the harmonics with k | n. Requires k >= 3.
    TrigPoly directional_average(int k) const;

    /// T_k[f](s) = (1/k) sum_m f(s + (2m-1) pi / k) = A_k[f](s + pi/k):
    /// keeps the constant term and harmonics n = k q with sign (-1)^q.
    /// Requires k >= 3.
    TrigPoly t_k(int k) const;

    /// Parseval: int_0^{2pi} f^2 ds = 2 pi a0^2 + pi sum (a_n^2 + b_n^2).
    double l2_norm_squared() const;

    /// |a0| + sum_n sqrt(a_n^2 + b_n^2) >= sup |f|.
    double amplitude_bound() const;

    TrigPoly& operator+=(const TrigPoly& other);
    TrigPoly& operator-=(const TrigPoly& other);
    friend TrigPoly operator+(TrigPoly lhs, const TrigPoly& rhs) { return lhs += rhs; }
    friend TrigPoly operator-(TrigPoly lhs, const TrigPoly& rhs) { return lhs -= rhs; }
    friend TrigPoly operator*(double t, const TrigPoly& f);

    friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  private:
    void canonicalize();

    double a0_ = 0.0;
    std::vector<Harmonic> harmonics_;  // sorted by n, zero pairs removed
};

/// Generalized k-width w_k(s) = sum_{j=0}^{k-1} f(s + 2 pi j / k)
/// = k * A_k[f](s). Requires k >= 3.
double generalized_k_width(const TrigPoly& f, int k, double s);

}  // namespace hedgehog
