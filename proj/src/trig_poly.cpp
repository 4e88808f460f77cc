#include "hedgehog/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hedgehog/geometry.hpp"

namespace hedgehog {

TrigPoly::TrigPoly(double constant) : a0_(constant) {}

TrigPoly::TrigPoly(double constant, std::vector<Harmonic> harmonics)
    : a0_(constant), harmonics_(std::move(harmonics)) {
    for (const Harmonic& h : harmonics_) {
        if (h.n < 1) throw std::invalid_argument("harmonic index must be >= 1");
    }
    std::sort(harmonics_.begin(), harmonics_.end(),
              [](const Harmonic& x, const Harmonic& y) { return x.n < y.n; });
    for (std::size_t i = 1; i < harmonics_.size(); ++i) {
        if (harmonics_[i].n == harmonics_[i - 1].n)
            throw std::invalid_argument("duplicate harmonic index");
    }
    canonicalize();
}

void TrigPoly::canonicalize() {
    std::erase_if(harmonics_, [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
}

int TrigPoly::degree() const {
    return harmonics_.empty() ? 0 : harmonics_.back().n;
}

std::pair<double, double> TrigPoly::coefficient(int n) const {
    if (n == 0) return {a0_, 0.0};
    auto it = std::lower_bound(harmonics_.begin(), harmonics_.end(), n,
                               [](const Harmonic& h, int idx) { return h.n < idx; });
    if (it != harmonics_.end() && it->n == n) return {it->a, it->b};
    return {0.0, 0.0};
}

double TrigPoly::evaluate(double s, int derivative_order) const {
    if (derivative_order < 0 || derivative_order > 4)
        throw std::invalid_argument("derivative order must be in 0..4");
    double value = derivative_order == 0 ? a0_ : 0.0;
    for (const Harmonic& h : harmonics_) {
        const double c = std::cos(h.n * s);
        const double si = std::sin(h.n * s);
        double factor = 1.0;
        for (int m = 0; m < derivative_order; ++m) factor *= h.n;
        // d/ds rotates the coefficient pair: (a, b) -> (b, -a) per order.
        double a = h.a, b = h.b;
        switch (derivative_order & 3) {
            case 1: std::tie(a, b) = std::pair{b, -a}; break;
            case 2: std::tie(a, b) = std::pair{-a, -b}; break;
            case 3: std::tie(a, b) = std::pair{-b, a}; break;
            default: break;
        }
        value += factor * (a * c + b * si);
    }
    return value;
}

TrigPoly TrigPoly::phase_shift(double alpha) const {
    TrigPoly out(*this);
    for (Harmonic& h : out.harmonics_) {
        const double c = std::cos(h.n * alpha);
        const double si = std::sin(h.n * alpha);
        const double a = h.a * c + h.b * si;
        const double b = h.b * c - h.a * si;
        h.a = a;
        h.b = b;
    }
    out.canonicalize();
    return out;
}

TrigPoly TrigPoly::filter_indices(const std::function<bool(int)>& predicate,
                                  bool keep_constant) const {
    TrigPoly out;
    out.a0_ = keep_constant ? a0_ : 0.0;
    for (const Harmonic& h : harmonics_)
        if (predicate(h.n)) out.harmonics_.push_back(h);
    out.canonicalize();
    return out;
}

TrigPoly TrigPoly::directional_average(int k) const {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    return filter_indices([k](int n) { return n % k == 0; }, true);
}

TrigPoly TrigPoly::t_k(int k) const {
    if (k < 3) throw std::invalid_argument("k must be >= 3");
    TrigPoly out = directional_average(k);
    for (Harmonic& h : out.harmonics_) {
        if ((h.n / k) % 2 != 0) {
            h.a = -h.a;
            h.b = -h.b;
        }
    }
    return out;
}

double TrigPoly::l2_norm_squared() const {
    double sum = 2.0 * a0_ * a0_;
    for (const Harmonic& h : harmonics_) sum += h.a * h.a + h.b * h.b;
    return kPi * sum;
}

double TrigPoly::amplitude_bound() const {
    double bound = std::abs(a0_);
    for (const Harmonic& h : harmonics_) bound += std::hypot(h.a, h.b);
    return bound;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
    a0_ += other.a0_;
    std::vector<Harmonic> merged;
    merged.reserve(harmonics_.size() + other.harmonics_.size());
    auto lhs = harmonics_.begin();
    auto rhs = other.harmonics_.begin();
    while (lhs != harmonics_.end() || rhs != other.harmonics_.end()) {
        if (rhs == other.harmonics_.end() ||
            (lhs != harmonics_.end() && lhs->n < rhs->n)) {
            merged.push_back(*lhs++);
        } else if (lhs == harmonics_.end() || rhs->n < lhs->n) {
            merged.push_back(*rhs++);
        } else {
            merged.push_back({lhs->n, lhs->a + rhs->a, lhs->b + rhs->b});
            ++lhs;
            ++rhs;
        }
    }
    harmonics_ = std::move(merged);
    canonicalize();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
    return *this += -1.0 * other;
}

TrigPoly operator*(double t, const TrigPoly& f) {
    TrigPoly out(f);
    out.a0_ *= t;
    for (Harmonic& h : out.harmonics_) {
        h.a *= t;
        h.b *= t;
    }
    out.canonicalize();
    return out;
}

double generalized_k_width(const TrigPoly& f, int k, double s) {
    return k * f.directional_average(k).evaluate(s);
}

}  // namespace hedgehog
