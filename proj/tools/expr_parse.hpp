#pragma once

// Strict parser for support-function expressions:
//
//     137 + 21*cos(2s) + sin(5s) - (1/3)*sin(9s) + 1/3*sin(10s)
//
// Terms are constants C or A*cos(N s) / A*sin(N s) joined by + and -, with
// integer N >= 1 and decimal or rational (p/q) coefficients; the '*' is
// optional. Repeated (N, cos/sin) terms accumulate.

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hedgehog/capi.h"

namespace cli {

class ExprParser {
  public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    /// Returns an error message, or nullopt on success.
    std::optional<std::string> parse(double& a0, std::vector<hh_harmonic>& harmonics) {
        a0 = 0.0;
        std::map<int, std::pair<double, double>> modes;
        skip_space();
        bool first = true;
        while (pos_ < text_.size()) {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
                skip_space();
            } else if (!first) {
                return err("expected '+' or '-' between terms");
            }
            first = false;

            double coefficient = 1.0;
            bool has_coefficient = false;
            if (peek() != 'c' && peek() != 's') {
                if (auto e = parse_coefficient(coefficient)) return e;
                has_coefficient = true;
                skip_space();
                if (peek() == '*') {
                    ++pos_;
                    skip_space();
                }
            }

            if (peek() == 'c' || peek() == 's') {
                bool is_cos = false;
                int n = 0;
                if (auto e = parse_trig(is_cos, n)) return e;
                auto& [a, b] = modes[n];
                (is_cos ? a : b) += sign * coefficient;
            } else if (has_coefficient) {
                a0 += sign * coefficient;
            } else {
                return err("expected a number, cos(..) or sin(..)");
            }
            skip_space();
        }
        if (first) return err("empty expression");

        harmonics.clear();
        for (const auto& [n, ab] : modes)
            if (ab.first != 0.0 || ab.second != 0.0)
                harmonics.push_back({n, ab.first, ab.second});
        return std::nullopt;
    }

  private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    std::optional<std::string> err(const std::string& what) const {
        return "expression error at position " + std::to_string(pos_) + ": " + what;
    }

    std::optional<std::string> parse_number(double& value) {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        value = std::strtod(begin, &end);
        if (end == begin) return err("expected a number");
        for (const char* c = begin; c != end; ++c)
            if (*c == 'e' || *c == 'E' || *c == 'x')
                return err("plain decimals only");
        pos_ += std::size_t(end - begin);
        return std::nullopt;
    }

    // number, number/number, or (number/number)
    std::optional<std::string> parse_coefficient(double& value) {
        const bool parenthesized = peek() == '(';
        if (parenthesized) {
            ++pos_;
            skip_space();
        }
        if (auto e = parse_number(value)) return e;
        skip_space();
        if (peek() == '/') {
            ++pos_;
            skip_space();
            double denominator = 0.0;
            if (auto e = parse_number(denominator)) return e;
            if (denominator == 0.0) return err("division by zero");
            value /= denominator;
            skip_space();
        }
        if (parenthesized) {
            if (peek() != ')') return err("expected ')'");
            ++pos_;
        }
        return std::nullopt;
    }

    // cos(Ns), sin(N s), cos(N*s), cos(s)
    std::optional<std::string> parse_trig(bool& is_cos, int& n) {
        if (text_.compare(pos_, 3, "cos") == 0) {
            is_cos = true;
        } else if (text_.compare(pos_, 3, "sin") == 0) {
            is_cos = false;
        } else {
            return err("expected cos or sin");
        }
        pos_ += 3;
        skip_space();
        if (peek() != '(') return err("expected '('");
        ++pos_;
        skip_space();
        n = 1;
        if (std::isdigit((unsigned char)peek())) {
            n = 0;
            while (std::isdigit((unsigned char)peek())) {
                n = 10 * n + (peek() - '0');
                ++pos_;
                if (n > 1000000) return err("harmonic index too large");
            }
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
            }
        }
        if (n < 1) return err("harmonic index must be >= 1");
        if (peek() != 's') return err("expected the variable 's'");
        ++pos_;
        skip_space();
        if (peek() != ')') return err("expected ')'");
        ++pos_;
        return std::nullopt;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace cli
