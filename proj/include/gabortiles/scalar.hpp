#pragma once

#include "gabortiles/rational.hpp"

#include <compare>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace gabortiles {

enum class NumberMode { rational, floating };

inline const char* mode_name(NumberMode m) {
    return m == NumberMode::rational ? "rational" : "float";
}

/// Formats a double with 17 significant digits (round-trip safe, deterministic).
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Dual-backend number: exact rational or IEEE double, tagged by mode.
/// Binary operations on mixed modes promote to floating; the promotion is
/// visible in the result's mode tag. Comparisons on mixed modes compare
/// double values.
class Scalar {
public:
    Scalar() : mode_(NumberMode::rational), q_(0), d_(0) {}
    Scalar(int n) : mode_(NumberMode::rational), q_(n), d_(0) {}
    Scalar(long long n) : mode_(NumberMode::rational), q_(n), d_(0) {}
    Scalar(Rational q) : mode_(NumberMode::rational), q_(std::move(q)), d_(0) {}
    Scalar(int num, int den) : mode_(NumberMode::rational), q_(num, den), d_(0) {}

    static Scalar from_double(double v) {
        Scalar s;
        s.mode_ = NumberMode::floating;
        s.d_ = v;
        return s;
    }

    /// Rational-first parsing: "p/q" and integer literals are exact, anything
    /// else parses as a double in floating mode.
    static Scalar parse(const std::string& text) {
        if (text.find_first_not_of("+-0123456789/") == std::string::npos &&
            text.find_first_of("0123456789") != std::string::npos) {
            return Scalar(parse_rational(text));
        }
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
        return from_double(v);
    }

    NumberMode mode() const { return mode_; }
    bool exact() const { return mode_ == NumberMode::rational; }

    const Rational& rat() const {
        if (!exact()) throw std::logic_error("scalar is not in rational mode");
        return q_;
    }

    double value() const { return exact() ? rational_to_double(q_) : d_; }

    Scalar to_floating() const { return from_double(value()); }

    std::string str() const {
        return exact() ? rational_to_string(q_) : format_double(d_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q_ + b.q_);
        return from_double(a.value() + b.value());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q_ - b.q_);
        return from_double(a.value() - b.value());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.q_ * b.q_);
        return from_double(a.value() * b.value());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) {
            if (b.q_ == 0) throw std::domain_error("division by zero");
            return Scalar(a.q_ / b.q_);
        }
        return from_double(a.value() / b.value());
    }
    Scalar operator-() const {
        return exact() ? Scalar(-q_) : from_double(-d_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.q_ == b.q_;
        return a.value() == b.value();
    }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) {
            if (a.q_ < b.q_) return std::strong_ordering::less;
            if (a.q_ > b.q_) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        double x = a.value(), y = b.value();
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Scalar abs() const { return *this < Scalar(0) ? -*this : *this; }

    bool is_zero() const { return exact() ? q_ == 0 : d_ == 0.0; }

    /// Integrality test: exact in rational mode, within tol in floating mode.
    bool is_integral(double tol = 0.0) const {
        if (exact()) return is_integer(q_);
        return std::abs(d_ - std::round(d_)) <= tol;
    }

    Scalar floor() const {
        if (exact()) return Scalar(Rational(floor_rational(q_)));
        return from_double(std::floor(d_));
    }

    /// Fractional part in [0,1) (exact in rational mode).
    Scalar frac() const { return *this - floor(); }

private:
    NumberMode mode_;
    Rational q_;
    double d_;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace gabortiles
