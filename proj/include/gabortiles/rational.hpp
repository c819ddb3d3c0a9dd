#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace gabortiles {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt floor_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

inline BigInt ceil_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt c = n / d;
    if (n > 0 && c * d != n) ++c;
    return c;
}

inline Rational frac_part(const Rational& q) { return q - Rational(floor_rational(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// q in (1/2)Z, i.e. 2q integral.
inline bool is_half_integer(const Rational& q) { return is_integer(Rational(2) * q); }

inline bool is_odd_integer(const Rational& q) {
    return is_integer(q) && numerator(q) % 2 != 0;
}

inline double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Best rational approximation of x with denominator <= max_den (continued fractions).
inline Rational rational_approx(double x, long max_den) {
    if (std::floor(x) == x && std::abs(x) < 9e15) return Rational(static_cast<long long>(x));
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int i = 0; i < 64; ++i) {
        double fa = std::floor(v);
        if (fa > 9e15 || fa < -9e15) break;
        long long a = static_cast<long long>(fa);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = v - fa;
        if (rem < 1e-18) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return Rational(p0, q0 == 0 ? 1 : q0);
    return Rational(p1, q1);
}

}  // namespace gabortiles
