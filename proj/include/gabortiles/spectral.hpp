#pragma once

#include "gabortiles/fourier.hpp"
#include "gabortiles/gabor.hpp"
#include "gabortiles/tiling.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace gabortiles {

/// Arithmetic progression offset + step Z (both signs), step > 0.
struct Progression {
    Scalar step;
    Scalar offset;

    bool contains(const Scalar& x) const {
        return ((x - offset) / step).frac().is_zero();
    }
};

namespace detail {

inline BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Extended gcd: g = ax + by.
inline BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    BigInt x1, y1;
    BigInt g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Rational lcm_rational(const Rational& a, const Rational& b) {
    BigInt num = numerator(a) * numerator(b) / gcd_big(numerator(a), numerator(b));
    BigInt den = gcd_big(denominator(a), denominator(b));
    return Rational(num, den);
}

/// Intersection of two progressions (rational CRT); nullopt when disjoint.
inline std::optional<Progression> intersect_progressions(const Progression& p,
                                                         const Progression& q) {
    Rational s1 = p.step.rat(), s2 = q.step.rat();
    Rational o1 = p.offset.rat(), o2 = q.offset.rat();
    // common denominator scaling to integers
    BigInt w = denominator(s1) * denominator(s2) * denominator(o1) * denominator(o2);
    Rational rw(w);
    BigInt u1 = numerator(Rational(s1 * rw));
    BigInt u2 = numerator(Rational(s2 * rw));
    BigInt v = numerator(Rational((o2 - o1) * rw));
    BigInt x, y;
    BigInt g = egcd(u1, u2, x, y);
    if (v % g != 0) return std::nullopt;
    // m u1 = v (mod u2): one solution m0 = x (v/g) mod (u2/g)
    BigInt mod = u2 / g;
    if (mod < 0) mod = -mod;
    BigInt m0 = (x * (v / g));
    if (mod != 0) {
        m0 %= mod;
        if (m0 < 0) m0 += mod;
    }
    Rational off = o1 + Rational(m0) * s1;
    Rational step = lcm_rational(s1, s2);
    return Progression{Scalar(step), Scalar(off)};
}

}  // namespace detail

/// Exact zero set of the indicator transform of a rational union with one or
/// two parts: a finite list of progressions whose union (minus the origin)
/// is Z(chi-hat). nullopt when no exact route applies.
inline std::optional<std::vector<Progression>> exact_zero_progressions(
    const IntervalUnion& a) {
    if (a.mode() != NumberMode::rational || a.is_empty()) return std::nullopt;
    const auto& parts = a.parts();
    std::vector<Progression> out;
    if (parts.size() == 1) {
        Scalar len = parts[0].length();
        out.push_back({Scalar(1) / len, Scalar(0)});
        return out;
    }
    if (parts.size() != 2) return std::nullopt;
    // endpoints a < b <= c < d (b < c after normalization)
    Scalar pa = parts[0].lo, pb = parts[0].hi, pc = parts[1].lo, pd = parts[1].hi;
    // pairing (i): nu (b-a) in Z and nu (d-c) in Z
    {
        Progression s1{Scalar(1) / (pb - pa), Scalar(0)};
        Progression s2{Scalar(1) / (pd - pc), Scalar(0)};
        if (auto r = detail::intersect_progressions(s1, s2)) out.push_back(*r);
    }
    // pairing (ii): nu (d-a) in Z and nu (c-b) in Z
    {
        Progression s1{Scalar(1) / (pd - pa), Scalar(0)};
        Progression s2{Scalar(1) / (pc - pb), Scalar(0)};
        if (auto r = detail::intersect_progressions(s1, s2)) out.push_back(*r);
    }
    // pairing (iii): nu (c-a) in Z + 1/2 and nu (d-b) in Z + 1/2
    {
        Scalar g1 = pc - pa, g2 = pd - pb;
        Progression s1{Scalar(1) / g1, Scalar(1, 2) / g1};
        Progression s2{Scalar(1) / g2, Scalar(1, 2) / g2};
        if (auto r = detail::intersect_progressions(s1, s2)) out.push_back(*r);
    }
    return out;
}

/// Numeric zero location for |chi-hat_A| on [lo, hi]: dense scan with step
/// 1/(8 diameter), local-minimum refinement by golden-section, zeros accepted
/// below tol.
inline std::vector<double> numeric_zeros(const IntervalUnion& a, double lo, double hi,
                                         double tol = 1e-9) {
    std::vector<double> zeros;
    if (!(lo < hi)) return zeros;
    double diam = a.diameter().value();
    double step = 1.0 / (8.0 * std::max(diam, 1e-9));
    int n = std::max(8, static_cast<int>(std::ceil((hi - lo) / step)));
    auto f = [&](double x) {
        return std::norm(ft_indicator(a, Scalar::from_double(x)));
    };
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) vals[i] = f(lo + (hi - lo) * i / n);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 1; i < n; ++i) {
        if (vals[i] > vals[i - 1] || vals[i] > vals[i + 1]) continue;
        double x0 = lo + (hi - lo) * (i - 1) / n, x1 = lo + (hi - lo) * (i + 1) / n;
        double c = x1 - gr * (x1 - x0), d = x0 + gr * (x1 - x0);
        double fc = f(c), fd = f(d);
        for (int it = 0; it < 200 && x1 - x0 > 1e-14; ++it) {
            if (fc < fd) {
                x1 = d;
                d = c;
                fd = fc;
                c = x1 - gr * (x1 - x0);
                fc = f(c);
            } else {
                x0 = c;
                c = d;
                fc = fd;
                d = x0 + gr * (x1 - x0);
                fd = f(d);
            }
        }
        double xm = 0.5 * (x0 + x1);
        if (std::sqrt(f(xm)) < tol) {
            if (zeros.empty() || xm - zeros.back() > 0.25 * step) zeros.push_back(xm);
        }
    }
    return zeros;
}

/// Spectral-pair verdict: both open difference sets avoid the zero set of
/// the other side's transform. Exact for rational pairs of at most two
/// intervals per side, scan-based otherwise.
struct SpectralPairVerdict {
    bool is_spectral_pair = false;
    bool tight = false;
    std::optional<Scalar> witness_diff_a;  // zero of B-hat inside A int - A int
    std::optional<Scalar> witness_diff_b;
    bool exact = false;
};

namespace detail {

/// Finds a zero of the transform of `other` inside the open difference set
/// of `self`; exact progressions when available, numeric scan otherwise.
inline std::optional<Scalar> zero_in_difference(const IntervalUnion& self,
                                                const IntervalUnion& other, double tol,
                                                bool& exact_route) {
    IntervalUnion diff = open_difference_set(self);
    auto progressions = exact_zero_progressions(other);
    if (progressions && diff.mode() == NumberMode::rational) {
        exact_route = true;
        for (const Interval& part : diff.parts()) {
            for (const Progression& pr : *progressions) {
                // members of pr strictly inside (lo, hi), excluding 0
                Scalar k0 = ((part.lo - pr.offset) / pr.step).floor();
                for (Scalar k = k0; ; k += Scalar(1)) {
                    Scalar x = pr.offset + k * pr.step;
                    if (!(x < part.hi)) break;
                    if (part.lo < x && x < part.hi && !x.is_zero()) return x;
                }
            }
        }
        return std::nullopt;
    }
    exact_route = false;
    for (const Interval& part : diff.parts()) {
        double lo = part.lo.value(), hi = part.hi.value();
        for (double z : numeric_zeros(other, lo, hi, tol)) {
            double margin = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
            if (z > lo + margin && z < hi - margin && std::abs(z) > margin)
                return Scalar::from_double(z);
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline SpectralPairVerdict spectral_pair_check(const IntervalUnion& a, const IntervalUnion& b,
                                               double tol = 1e-9) {
    if (a.is_empty() || b.is_empty()) throw std::invalid_argument("empty set in pair");
    SpectralPairVerdict v;
    bool exact_a = false, exact_b = false;
    v.witness_diff_a = detail::zero_in_difference(a, b, tol, exact_a);
    v.witness_diff_b = detail::zero_in_difference(b, a, tol, exact_b);
    v.exact = exact_a && exact_b;
    v.is_spectral_pair = !v.witness_diff_a && !v.witness_diff_b;
    Scalar one(1);
    Scalar ma = a.measure(), mb = b.measure();
    bool unit_a = ma.exact() ? ma == one : std::abs(ma.value() - 1.0) <= 1e-12;
    bool unit_b = mb.exact() ? mb == one : std::abs(mb.value() - 1.0) <= 1e-12;
    v.tight = v.is_spectral_pair && unit_a && unit_b;
    return v;
}

/// A verified pair with its constituents, for product composition.
struct SpectralPair {
    IntervalUnion a, b;
    SpectralPairVerdict verdict;
};

struct SpectralPair2D {
    ProductRegion2D a, b;
    bool tight = false;
};

/// Product of two verified spectral pairs: (A x C, B x D); tightness
/// multiplies. Unverified inputs are rejected.
inline SpectralPair2D spectral_pair_product(const SpectralPair& p, const SpectralPair& q) {
    if (!p.verdict.is_spectral_pair || !q.verdict.is_spectral_pair)
        throw std::invalid_argument("spectral_pair_product needs verified spectral pairs");
    return {ProductRegion2D(p.a, q.a), ProductRegion2D(p.b, q.b),
            p.verdict.tight && q.verdict.tight};
}

/// Duality check for a tight spectral pair (A,B): Lambda is a spectrum of A
/// exactly when B + Lambda tiles. The tiling side runs the exact sweep; the
/// spectrum side checks pairwise orthogonality of the exponentials on A
/// (completeness is delegated to the tiling side by the duality).
struct SpectrumTilingCheck {
    Verdict tiling_side;
    bool orthogonality_side = false;
    std::optional<Scalar> orthogonality_witness;
    bool is_spectrum = false;  // = tiling side, by the duality
    bool agree = false;        // tiling true forces orthogonality true
};

inline SpectrumTilingCheck spectrum_tiling_check(const IntervalUnion& a,
                                                 const IntervalUnion& b,
                                                 const SpectralPairVerdict& pair_verdict,
                                                 const TranslationSet1D& lam,
                                                 const Interval& window,
                                                 double tol = 1e-9) {
    if (!pair_verdict.tight)
        throw std::invalid_argument("spectrum_tiling_check needs a tight spectral pair");
    SpectrumTilingCheck out;
    out.tiling_side = check_tiling_1d(b, lam, window, b.diameter());
    out.orthogonality_side = true;
    std::vector<Scalar> pts = lam.enumerate(window.lo, window.hi);
    std::set<Scalar> seen;
    for (size_t i = 0; i < pts.size() && out.orthogonality_side; ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Scalar d = (pts[j] - pts[i]).abs();
            if (!seen.insert(d).second) continue;
            if (std::abs(ft_indicator(a, d)) > tol) {
                out.orthogonality_side = false;
                out.orthogonality_witness = d;
                break;
            }
        }
    }
    out.is_spectrum = out.tiling_side.is_tiling();
    out.agree = !(out.is_spectrum && !out.orthogonality_side);
    return out;
}

/// |chi-hat| of the half-case frequency block set in product form:
/// |sin(pi w/(2b+1)) / (pi w)| * |sin(2 pi w)| / |sin(2 pi w/(2b+1))|,
/// with the geometric finite sum taking over where the denominator sine
/// vanishes (the limits are finite there).
inline double block_set_ft_product_form(const Scalar& beta, const Scalar& omega) {
    bool half_integral = beta.exact() ? is_half_integer(beta.rat())
                                      : (Scalar(2) * beta).is_integral(1e-9);
    if (!half_integral || !(Scalar(0) < beta))
        throw std::invalid_argument("block set needs beta in (1/2)N");
    double b = beta.value(), wv = omega.value();
    double len = 1.0 / (2.0 * b + 1.0);
    double first = std::abs(detail::sinc_factor(wv, len));
    double den = std::sin(2.0 * kPi * wv * len);
    long long terms = static_cast<long long>(std::llround(2.0 * b)) + 1;
    double ratio;
    if (std::abs(den) < 1e-8) {
        Complex s = 0.0;
        for (long long k = 0; k < terms; ++k)
            s += detail::unit_phase(-4.0 * kPi * k * len * wv);
        ratio = std::abs(s);
    } else {
        ratio = std::abs(std::sin(2.0 * kPi * wv) / den);
    }
    return first * ratio;
}

}  // namespace gabortiles
