#pragma once

#include "gabortiles/interval.hpp"
#include "gabortiles/quadrature.hpp"
#include "gabortiles/window.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace gabortiles {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

namespace detail {

/// sin(pi nu L) / (pi nu), with the removable singularity at nu -> 0 handled
/// by the series L (1 - x^2/6), x = pi nu L.
inline double sinc_factor(double nu, double length) {
    double x = kPi * nu * length;
    if (std::abs(x) < 1e-8) return length * (1.0 - x * x / 6.0);
    return std::sin(x) / (kPi * nu);
}

inline Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace detail

/// Fourier transform of the indicator of A at frequency nu:
/// sum over parts [a,b) of sin(pi nu (b-a))/(pi nu) e^{-pi i (a+b) nu}.
inline Complex ft_indicator(const IntervalUnion& a, const Scalar& nu) {
    double v = nu.value();
    Complex acc = 0.0;
    for (const Interval& p : a.parts()) {
        double len = p.length().value();
        double mids = p.lo.value() + p.hi.value();
        acc += detail::sinc_factor(v, len) * detail::unit_phase(-kPi * mids * v);
    }
    return acc;
}

/// Omega n (Omega + t) for t >= 0, by generic intersection. Agrees with the
/// case-by-case overlap tables for every window regime.
inline IntervalUnion overlap_set(const WindowParams& w, const Scalar& t) {
    if (t < Scalar(0)) throw std::invalid_argument("overlap_set requires t >= 0");
    IntervalUnion omega = w.set();
    return intersect(omega, translate(omega, t), true);
}

/// The window's STFT against itself, V_g g(t, nu) = ft of Omega n (Omega + t).
/// Negative t is handled through the translated overlap, which keeps the
/// phase exact and gives |V(t,nu)| = |V(-t,nu)| automatically.
inline Complex stft_auto(const WindowParams& w, const Scalar& t, const Scalar& nu) {
    IntervalUnion omega = w.set();
    return ft_indicator(intersect(omega, translate(omega, t), true), nu);
}

/// V_g f for f = indicator of F, g = indicator of the window:
/// ft of F n (Omega + t).
inline Complex stft_cross(const IntervalUnion& f, const WindowParams& w, const Scalar& t,
                          const Scalar& nu) {
    return ft_indicator(intersect(f, translate(w.set(), t), true), nu);
}

/// Defining-integral oracle: composite Gauss-Legendre evaluation of
/// int_{F n (G+t)} e^{-2 pi i x nu} dx with at least `min_panels` panels per
/// interval part and at least 8 panels per oscillation period.
inline Complex stft_quadrature(const IntervalUnion& f, const IntervalUnion& g,
                               const Scalar& t, const Scalar& nu, int min_panels = 8) {
    if (min_panels < 2) throw std::invalid_argument("need at least 2 panels per part");
    IntervalUnion dom = intersect(f, translate(g, t), true);
    double v = nu.value();
    Complex acc = 0.0;
    for (const Interval& p : dom.parts()) {
        double a = p.lo.value(), b = p.hi.value();
        int panels = oscillation_panels(b - a, v, min_panels);
        acc += integrate_panels(
            [v](double x) { return detail::unit_phase(-2.0 * kPi * v * x); }, a, b, panels);
    }
    return acc;
}

/// Time-frequency covariance: for lambda = (s, omega), both sides of
///   V_g f_lambda (x, nu) = e^{-2 pi i s (nu - omega)} V_g f(x-s, nu-omega).
/// The left side is evaluated by quadrature of the modulated shifted f, the
/// right side in closed form.
struct CovariancePair {
    Complex quadrature_lhs;
    Complex closed_form_rhs;
};

inline CovariancePair covariance_check(const IntervalUnion& f, const WindowParams& w,
                                       const TimeFrequencyPoint& lambda, const Scalar& x,
                                       const Scalar& nu, int min_panels = 16) {
    // f_lambda(y) = f(y - s) e^{2 pi i y omega}, so the integrand of the
    // defining integral lives on (F + s) n (Omega + x) with frequency nu - omega.
    IntervalUnion dom = intersect(translate(f, lambda.t), translate(w.set(), x), true);
    double eff = nu.value() - lambda.nu.value();
    Complex lhs = 0.0;
    for (const Interval& p : dom.parts()) {
        double a = p.lo.value(), b = p.hi.value();
        int panels = oscillation_panels(b - a, eff, min_panels);
        lhs += integrate_panels(
            [eff](double y) { return detail::unit_phase(-2.0 * kPi * eff * y); }, a, b,
            panels);
    }
    Complex rhs = detail::unit_phase(-2.0 * kPi * lambda.t.value() * eff) *
                  stft_cross(f, w, x - lambda.t, nu - lambda.nu);
    return {lhs, rhs};
}

/// |V_g g(t, nu)| <= min(|overlap|, parts/(pi |nu|)); each half-open part
/// contributes at most 1/(pi |nu|).
inline double stft_auto_decay_bound(const WindowParams& w, const Scalar& t,
                                    const Scalar& nu) {
    IntervalUnion omega = w.set();
    IntervalUnion ov = intersect(omega, translate(omega, t), true);
    double m = ov.measure().value();
    double v = std::abs(nu.value());
    if (v == 0.0) return m;
    return std::min(m, static_cast<double>(ov.parts().size()) / (kPi * v));
}

/// Numerically integrates V_{g1}f1 conj(V_{g2}f2) over [t0,t1] x [n0,n1]
/// with the closed forms as integrand. The t-axis is cut at every endpoint
/// difference so each Gauss panel sees a smooth integrand; the nu axis uses
/// composite panels dense enough for the trigonometric oscillation.
inline Complex stft_pair_integral_box(const IntervalUnion& f1, const IntervalUnion& g1,
                                      const IntervalUnion& f2, const IntervalUnion& g2,
                                      double t0, double t1, double n0, double n1,
                                      int t_order = 16, int nu_panels_per_unit = 8) {
    std::vector<double> cuts{t0, t1};
    auto add_cuts = [&](const IntervalUnion& f, const IntervalUnion& g) {
        for (const Interval& pf : f.parts())
            for (const Interval& pg : g.parts())
                for (double d :
                     {pf.lo.value() - pg.lo.value(), pf.lo.value() - pg.hi.value(),
                      pf.hi.value() - pg.lo.value(), pf.hi.value() - pg.hi.value()})
                    if (d > t0 && d < t1) cuts.push_back(d);
    };
    add_cuts(f1, g1);
    add_cuts(f2, g2);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const QuadratureRule tr = gauss_legendre(t_order);
    Complex total = 0.0;
    int nu_panels = std::max(4, static_cast<int>(std::ceil((n1 - n0) * nu_panels_per_unit)));
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        double mid = 0.5 * (cuts[c] + cuts[c + 1]), half = 0.5 * (cuts[c + 1] - cuts[c]);
        for (int i = 0; i < t_order; ++i) {
            Scalar t = Scalar::from_double(mid + half * tr.nodes[i]);
            IntervalUnion dom1 = intersect(f1, translate(g1, t), true);
            IntervalUnion dom2 = intersect(f2, translate(g2, t), true);
            if (dom1.is_empty() || dom2.is_empty()) continue;
            Complex inner = integrate_panels(
                [&dom1, &dom2](double nu) {
                    Scalar s = Scalar::from_double(nu);
                    return ft_indicator(dom1, s) * std::conj(ft_indicator(dom2, s));
                },
                n0, n1, nu_panels);
            total += tr.weights[i] * half * inner;
        }
    }
    return total;
}

}  // namespace gabortiles
