#pragma once

#include "gabortiles/fourier.hpp"
#include "gabortiles/window.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gabortiles {

enum class ZeroComponentKind { vertical_strip, hyperbola, horizontal_lines, discrete_points };

inline const char* zero_component_kind_name(ZeroComponentKind k) {
    switch (k) {
        case ZeroComponentKind::vertical_strip: return "vertical_strip";
        case ZeroComponentKind::hyperbola: return "hyperbola";
        case ZeroComponentKind::horizontal_lines: return "horizontal_lines";
        case ZeroComponentKind::discrete_points: return "discrete_points";
    }
    return "?";
}

enum class DiscreteFamily {
    none,
    small_alpha_strip_pairing,  // (alpha - k/nu, nu), nu = n/(1-2 alpha)
    small_alpha_integer_freq,   // (k/n - beta, n), k/n in [beta, beta+alpha)
    half_alpha_lattice          // (k/nu - beta, nu), nu = n/(2 beta + 1)
};

/// One component of the zero catalog in the quadrant t,nu >= 0.
///   vertical_strip:   t in [t_lo, t_hi] (t_hi absent = unbounded), every nu
///   hyperbola:        nu = k/(c + sign t) for k = 1,2,..., t in range
///   horizontal_lines: nu = m * base for m = 1,2,... (odd m only if odd_only)
///   discrete_points:  one of the DiscreteFamily parametrizations
struct ZeroComponent {
    ZeroComponentKind kind;
    std::string id;

    Scalar t_lo;
    std::optional<Scalar> t_hi;
    bool t_lo_open = false;

    Scalar hyp_c;
    int hyp_sign = -1;

    Scalar line_base;
    bool line_odd_only = false;

    DiscreteFamily family = DiscreteFamily::none;

    static ZeroComponent make(ZeroComponentKind kind, std::string id, Scalar t_lo,
                              std::optional<Scalar> t_hi) {
        ZeroComponent c;
        c.kind = kind;
        c.id = std::move(id);
        c.t_lo = std::move(t_lo);
        c.t_hi = std::move(t_hi);
        return c;
    }

    bool t_in_range(const Scalar& t, double tol) const {
        Scalar lo_slack = t_lo - Scalar::from_double(tol);
        if (tol == 0.0 ? (t_lo_open ? !(t_lo < t) : t < t_lo) : t < lo_slack) return false;
        if (!t_hi) return true;
        if (tol == 0.0) return t < *t_hi || t == *t_hi;
        return !(Scalar::from_double(tol) + *t_hi < t);
    }

    Scalar hyperbola_denom(const Scalar& t) const {
        return hyp_sign > 0 ? t + hyp_c : hyp_c - t;
    }
};

/// Symbolic catalog of Z+(V_g g) for one window; the full zero set follows
/// from the reflection symmetries in t and nu.
struct ZeroSetDescription {
    Scalar alpha, beta;
    bool alpha_is_half = false;
    std::vector<ZeroComponent> components;
    std::vector<std::string> notes;
};

namespace detail {

inline bool near_integer_at_least(const Scalar& x, double tol, long long min_value,
                                  bool odd_only = false) {
    if (x.exact() && tol == 0.0) {
        if (!is_integer(x.rat())) return false;
        if (numerator(x.rat()) < min_value) return false;
        return !odd_only || is_odd_integer(x.rat());
    }
    double v = x.value();
    double r = std::round(v);
    if (std::abs(v - r) > tol) return false;
    if (r < static_cast<double>(min_value)) return false;
    return !odd_only || std::llabs(static_cast<long long>(r)) % 2 == 1;
}

}  // namespace detail

/// Zero catalog for 0 < alpha < 1/2, beta a positive integer. The resonance
/// line family is included exactly when (beta+alpha)/(1-2 alpha) reduces to
/// odd/even; in floating mode the detection is numeric (tol 1e-12) and each
/// candidate family is admitted only after the closed form vanishes on it.
inline ZeroSetDescription zero_set_alpha_lt_half(const Scalar& alpha, const Scalar& beta) {
    Scalar half(1, 2);
    if (!(Scalar(0) < alpha) || !(alpha < half))
        throw std::invalid_argument("wrong regime: need 0 < alpha < 1/2");
    if (alpha.exact() && beta.exact()) {
        if (!is_integer(beta.rat()) || beta.rat() <= 0)
            throw std::invalid_argument("catalog requires beta a positive integer");
    } else if (!beta.is_integral(1e-9) || !(Scalar(0) < beta)) {
        throw std::invalid_argument("catalog requires beta a positive integer");
    }

    ZeroSetDescription zs;
    zs.alpha = alpha;
    zs.beta = beta;
    zs.alpha_is_half = false;
    const Scalar one(1);

    ZeroComponent strip_mid = ZeroComponent::make(ZeroComponentKind::vertical_strip,
                                                  "strip_mid", one - alpha, beta);
    ZeroComponent strip_far = ZeroComponent::make(ZeroComponentKind::vertical_strip,
                                                  "strip_far", beta + one, std::nullopt);
    zs.components.push_back(strip_mid);
    zs.components.push_back(strip_far);

    ZeroComponent hyp_first =
        ZeroComponent::make(ZeroComponentKind::hyperbola, "hyp_first", alpha, one - alpha);
    hyp_first.hyp_c = one - alpha;
    hyp_first.hyp_sign = -1;
    zs.components.push_back(hyp_first);

    ZeroComponent hyp_reenter = ZeroComponent::make(ZeroComponentKind::hyperbola,
                                                    "hyp_reenter", beta, beta + alpha);
    hyp_reenter.t_lo_open = true;  // t = beta sits in the middle strip
    hyp_reenter.hyp_c = -beta;
    hyp_reenter.hyp_sign = +1;
    zs.components.push_back(hyp_reenter);

    ZeroComponent plateau = ZeroComponent::make(ZeroComponentKind::horizontal_lines,
                                                "lines_plateau", beta + alpha,
                                                beta + one - alpha);
    plateau.line_base = one / alpha;
    zs.components.push_back(plateau);

    ZeroComponent hyp_exit = ZeroComponent::make(ZeroComponentKind::hyperbola, "hyp_exit",
                                                 beta + one - alpha, beta + one);
    hyp_exit.hyp_c = beta + one;
    hyp_exit.hyp_sign = -1;
    zs.components.push_back(hyp_exit);

    ZeroComponent fam_a = ZeroComponent::make(ZeroComponentKind::discrete_points,
                                              "points_strip_pairing", Scalar(0), alpha);
    fam_a.family = DiscreteFamily::small_alpha_strip_pairing;
    zs.components.push_back(fam_a);

    ZeroComponent fam_b = ZeroComponent::make(ZeroComponentKind::discrete_points,
                                              "points_integer_freq", Scalar(0), alpha);
    fam_b.family = DiscreteFamily::small_alpha_integer_freq;
    zs.components.push_back(fam_b);
    zs.notes.push_back(
        "points_integer_freq admits the boundary k/n = beta (t = 0): the transform of the "
        "window vanishes at every positive integer frequency, confirmed exactly");

    // Resonance branch: (beta+alpha)/(1-2 alpha) = odd/(2 q') gives horizontal
    // lines nu = m q'/(1-2 alpha), m odd, across the whole band t in [0,alpha).
    std::optional<Scalar> res_base;
    if (alpha.exact() && beta.exact()) {
        Rational r = ((beta + alpha) / (one - Scalar(2) * alpha)).rat();
        if (numerator(r) % 2 != 0 && denominator(r) % 2 == 0) {
            Rational qp = denominator(r) / 2;
            res_base = Scalar(Rational(qp)) / (one - Scalar(2) * alpha);
        }
    } else {
        double r = (beta.value() + alpha.value()) / (1.0 - 2.0 * alpha.value());
        Rational approx = rational_approx(r, 1000);
        if (std::abs(r - rational_to_double(approx)) < 1e-12 &&
            numerator(approx) % 2 != 0 && denominator(approx) % 2 == 0) {
            double base = rational_to_double(Rational(denominator(approx) / 2)) /
                          (1.0 - 2.0 * alpha.value());
            // oracle arbitration before admitting a numeric resonance
            WindowParams w(alpha, beta);
            if (std::abs(stft_auto(w, alpha / Scalar(2), Scalar::from_double(base))) < 1e-8) {
                res_base = Scalar::from_double(base);
                zs.notes.push_back("numerically resonant (tol 1e-12), oracle confirmed");
            }
        }
    }
    if (res_base) {
        ZeroComponent lines = ZeroComponent::make(ZeroComponentKind::horizontal_lines,
                                                  "lines_resonant", Scalar(0), alpha);
        lines.line_base = *res_base;
        lines.line_odd_only = true;
        zs.components.push_back(lines);
    }
    return zs;
}

/// Zero catalog for alpha = 1/2, beta in (1/2)N, beta >= 1/2. The horizontal
/// line family carries odd numerators over 2 beta + 1: the closed form
/// vanishes on nu(2 beta+1) odd and does not on even numerators; the catalog
/// records that the stated even form was rejected by the oracle.
inline ZeroSetDescription zero_set_alpha_half(const Scalar& beta) {
    Scalar half(1, 2);
    if (beta < half) throw std::invalid_argument("wrong regime: need beta >= 1/2");
    if (beta.exact()) {
        if (!is_half_integer(beta.rat()))
            throw std::invalid_argument("catalog requires beta in (1/2)N");
    } else if (!(Scalar(2) * beta).is_integral(1e-9)) {
        throw std::invalid_argument("catalog requires beta in (1/2)N");
    }

    ZeroSetDescription zs;
    zs.alpha = half;
    zs.beta = beta;
    zs.alpha_is_half = true;
    const Scalar one(1);

    ZeroComponent strip_mid = ZeroComponent::make(ZeroComponentKind::vertical_strip,
                                                  "strip_mid", half, beta);
    ZeroComponent strip_far = ZeroComponent::make(ZeroComponentKind::vertical_strip,
                                                  "strip_far", beta + one, std::nullopt);
    zs.components.push_back(strip_mid);
    zs.components.push_back(strip_far);

    ZeroComponent hyp_first =
        ZeroComponent::make(ZeroComponentKind::hyperbola, "hyp_first", Scalar(0), half);
    hyp_first.hyp_c = half;
    hyp_first.hyp_sign = -1;
    zs.components.push_back(hyp_first);

    ZeroComponent hyp_reenter = ZeroComponent::make(ZeroComponentKind::hyperbola,
                                                    "hyp_reenter", beta, beta + half);
    hyp_reenter.t_lo_open = true;
    hyp_reenter.hyp_c = -beta;
    hyp_reenter.hyp_sign = +1;
    zs.components.push_back(hyp_reenter);

    ZeroComponent hyp_exit = ZeroComponent::make(ZeroComponentKind::hyperbola, "hyp_exit",
                                                 beta + half, beta + one);
    hyp_exit.hyp_c = beta + one;
    hyp_exit.hyp_sign = -1;
    zs.components.push_back(hyp_exit);

    ZeroComponent fam = ZeroComponent::make(ZeroComponentKind::discrete_points,
                                            "points_lattice", Scalar(0), half);
    fam.family = DiscreteFamily::half_alpha_lattice;
    zs.components.push_back(fam);
    zs.notes.push_back(
        "points_lattice admits the boundary k/n = 1/2 (t = 1/2): the overlap there is a "
        "null set, so the transform vanishes for every frequency");

    ZeroComponent lines = ZeroComponent::make(ZeroComponentKind::horizontal_lines,
                                              "lines_odd", Scalar(0), half);
    lines.line_base = one / (Scalar(2) * beta + one);
    lines.line_odd_only = true;
    zs.components.push_back(lines);
    zs.notes.push_back(
        "lines_odd stores nu = (2k+1)/(2 beta+1): the even-numerator variant fails the "
        "closed-form oracle, the odd one vanishes identically in t");

    return zs;
}

namespace detail {

inline bool component_matches(const ZeroSetDescription& zs, const ZeroComponent& c,
                              const Scalar& t, const Scalar& nu, double tol) {
    switch (c.kind) {
        case ZeroComponentKind::vertical_strip:
            return c.t_in_range(t, tol);
        case ZeroComponentKind::hyperbola: {
            if (!c.t_in_range(t, tol)) return false;
            Scalar denom = c.hyperbola_denom(t);
            if (!(Scalar(0) < denom)) return false;
            return near_integer_at_least(nu * denom, tol * (denom.value() + 1.0), 1);
        }
        case ZeroComponentKind::horizontal_lines: {
            if (!c.t_in_range(t, tol)) return false;
            return near_integer_at_least(nu / c.line_base, tol / c.line_base.value(), 1,
                                         c.line_odd_only);
        }
        case ZeroComponentKind::discrete_points: {
            if (!c.t_in_range(t, tol)) return false;
            const Scalar one(1);
            switch (c.family) {
                case DiscreteFamily::small_alpha_strip_pairing: {
                    Scalar gap = one - Scalar(2) * zs.alpha;
                    if (!near_integer_at_least(nu * gap, tol * (gap.value() + 1.0), 1))
                        return false;
                    return near_integer_at_least(nu * (zs.alpha - t),
                                                 tol * (nu.value() + 1.0), 1);
                }
                case DiscreteFamily::small_alpha_integer_freq: {
                    if (!near_integer_at_least(nu, tol, 1)) return false;
                    return near_integer_at_least(nu * (t + zs.beta),
                                                 tol * (nu.value() + 1.0), 1);
                }
                case DiscreteFamily::half_alpha_lattice: {
                    Scalar den = Scalar(2) * zs.beta + one;
                    if (!near_integer_at_least(nu * den, tol * (den.value() + 1.0), 1))
                        return false;
                    return near_integer_at_least(nu * (t + zs.beta),
                                                 tol * (nu.value() + 1.0), 1);
                }
                case DiscreteFamily::none: return false;
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

/// Membership in the catalog; exact when the catalog and the point are
/// rational and tol = 0. The caller reduces to the quadrant first.
inline bool contains(const ZeroSetDescription& zs, const TimeFrequencyPoint& p,
                     double tol = 0.0) {
    if (p.t < Scalar(0) || p.nu < Scalar(0))
        throw std::invalid_argument("apply symmetry first: catalog covers t, nu >= 0");
    for (const ZeroComponent& c : zs.components)
        if (detail::component_matches(zs, c, p.t, p.nu, tol)) return true;
    return false;
}

/// True when (t, nu) lies in a region certified zero-free by one of the
/// interval lemmas (single short interval, unequal pair of total length < 1,
/// the three-interval shape, or an equal pair off the odd lattice).
inline bool zero_free_predicates(const WindowParams& w, const Scalar& t, const Scalar& nu) {
    Scalar at = t.abs(), anu = nu.abs();
    IntervalUnion ov = overlap_set(w, at);
    const Scalar one(1);
    if (ov.is_empty()) return false;
    if (ov.parts().size() == 1) {
        return anu * ov.parts()[0].length() < one;
    }
    if (ov.parts().size() == 2) {
        Scalar l1 = ov.parts()[0].length(), l2 = ov.parts()[1].length();
        if (l1 == l2) {
            if (!(anu < Scalar(2))) return false;
            Scalar q = Scalar(2) * (ov.parts()[1].midpoint() - ov.parts()[0].midpoint()) * anu;
            bool on_lattice = q.exact() ? is_odd_integer(q.rat())
                                        : (std::abs(q.value() - std::round(q.value())) < 1e-9 &&
                                           std::llabs(static_cast<long long>(
                                               std::round(q.value()))) %
                                                   2 ==
                                               1);
            return !on_lattice;
        }
        return l1 + l2 < one && !(one < anu);
    }
    if (ov.parts().size() == 3) {
        // the shape of the three-interval lemma: 0 < beta < t < alpha < 1/2
        if (w.beta() < at && at < w.alpha() && w.alpha() < Scalar(1, 2))
            return !(one < anu);
    }
    return false;
}

/// A point emitted for figure data.
struct ZeroSamplePoint {
    double t, nu;
    std::string component_id;
    std::string kind;
};

namespace detail {

inline void sample_curve(const ZeroComponent& c, double k, double t0, double t1,
                         double nu_max, double t_scale, double nu_scale, int resolution,
                         std::vector<std::pair<double, double>>& out) {
    auto nu_of = [&](double t) {
        double denom = c.hyp_sign > 0 ? t + c.hyp_c.value() : c.hyp_c.value() - t;
        return k / denom;
    };
    // clip to nu <= nu_max: denom >= k / nu_max
    double dmin = k / nu_max;
    if (c.hyp_sign > 0) t0 = std::max(t0, dmin - c.hyp_c.value());
    else t1 = std::min(t1, c.hyp_c.value() - dmin);
    if (!(t0 < t1)) return;
    // arclength-uniform resampling from a fine chord table, in scaled coords
    int fine = std::max(64, 4 * resolution);
    std::vector<double> ts(fine + 1), cum(fine + 1, 0.0);
    for (int i = 0; i <= fine; ++i) ts[i] = t0 + (t1 - t0) * i / fine;
    for (int i = 1; i <= fine; ++i) {
        double dx = (ts[i] - ts[i - 1]) / t_scale;
        double dy = (nu_of(ts[i]) - nu_of(ts[i - 1])) / nu_scale;
        cum[i] = cum[i - 1] + std::hypot(dx, dy);
    }
    double total = cum[fine];
    if (total == 0.0) return;
    size_t j = 0;
    for (int i = 0; i < resolution; ++i) {
        double target = total * (i + 0.5) / resolution;
        while (j + 1 < cum.size() && cum[j + 1] < target) ++j;
        double frac = (target - cum[j]) / std::max(cum[j + 1] - cum[j], 1e-300);
        double t = ts[j] + (ts[j + 1] - ts[j]) * frac;
        out.emplace_back(t, nu_of(t));
    }
}

}  // namespace detail

/// Deterministic figure-data sampler: at most `resolution` points per
/// continuous component instance, every point verified against the catalog
/// and against the closed form (|V_g g| < 1e-8).
inline std::vector<ZeroSamplePoint> sample(const ZeroSetDescription& zs, const Scalar& t_max,
                                           const Scalar& nu_max, int resolution) {
    if (!(Scalar(0) < t_max) || !(Scalar(0) < nu_max)) return {};
    WindowParams w(zs.alpha, zs.beta);
    double tmax = t_max.value(), numax = nu_max.value();
    std::vector<ZeroSamplePoint> out;

    auto push_checked = [&](double t, double nu, const ZeroComponent& c) {
        if (t < 0.0 || t > tmax || nu < 0.0 || nu > numax) return;
        TimeFrequencyPoint p{Scalar::from_double(t), Scalar::from_double(nu)};
        if (!contains(zs, p, 1e-7)) return;
        if (std::abs(stft_auto(w, p.t, p.nu)) >= 1e-8) return;
        out.push_back({t, nu, c.id, zero_component_kind_name(c.kind)});
    };

    int grid = std::max(2, static_cast<int>(std::floor(std::sqrt(double(resolution)))));
    for (const ZeroComponent& c : zs.components) {
        double lo = c.t_lo.value();
        double hi = c.t_hi ? c.t_hi->value() : tmax;
        lo = std::max(lo, 0.0);
        hi = std::min(hi, tmax);
        switch (c.kind) {
            case ZeroComponentKind::vertical_strip: {
                if (!(lo <= hi)) break;
                for (int i = 0; i < grid; ++i)
                    for (int j = 0; j < grid; ++j) {
                        double t = hi > lo ? lo + (hi - lo) * (i + 0.5) / grid
                                           : lo;  // degenerate strip = line
                        push_checked(t, numax * (j + 0.5) / grid, c);
                    }
                break;
            }
            case ZeroComponentKind::hyperbola: {
                if (!(lo < hi)) break;
                double dhi = std::max(c.hyperbola_denom(Scalar::from_double(lo)).value(),
                                      c.hyperbola_denom(Scalar::from_double(hi)).value());
                int kmax = static_cast<int>(std::floor(numax * dhi));
                for (int k = 1; k <= kmax; ++k) {
                    std::vector<std::pair<double, double>> pts;
                    detail::sample_curve(c, k, lo, hi, numax, tmax, numax, resolution, pts);
                    for (auto& [t, nu] : pts) push_checked(t, nu, c);
                }
                break;
            }
            case ZeroComponentKind::horizontal_lines: {
                if (!(lo < hi)) break;
                double base = c.line_base.value();
                for (int m = 1; m * base <= numax; m += c.line_odd_only ? 2 : 1) {
                    for (int i = 0; i < resolution; ++i)
                        push_checked(lo + (hi - lo) * (i + 0.5) / resolution, m * base, c);
                }
                break;
            }
            case ZeroComponentKind::discrete_points: {
                double a = zs.alpha.value(), b = zs.beta.value();
                if (c.family == DiscreteFamily::small_alpha_strip_pairing) {
                    double s = 1.0 / (1.0 - 2.0 * a);
                    for (int n = 1; n * s <= numax; ++n) {
                        double nu = n * s;
                        for (int k = 1; k <= static_cast<int>(std::floor(nu * a + 1e-12));
                             ++k)
                            push_checked(a - k / nu, nu, c);
                    }
                } else if (c.family == DiscreteFamily::small_alpha_integer_freq) {
                    for (int n = 1; n <= static_cast<int>(std::floor(numax)); ++n) {
                        int k0 = static_cast<int>(std::ceil(b * n - 1e-12));
                        int k1 = static_cast<int>(std::floor((b + a) * n + 1e-12));
                        for (int k = k0; k <= k1; ++k)
                            push_checked(static_cast<double>(k) / n - b, n, c);
                    }
                } else if (c.family == DiscreteFamily::half_alpha_lattice) {
                    double den = 2.0 * b + 1.0;
                    for (int n = 1; n / den <= numax; ++n) {
                        double nu = n / den;
                        int k0 = static_cast<int>(std::ceil(b * nu - 1e-12));
                        int k1 = static_cast<int>(std::floor((b + 0.5) * nu + 1e-12));
                        for (int k = k0; k <= k1; ++k) push_checked(k / nu - b, nu, c);
                    }
                }
                break;
            }
        }
    }
    return out;
}

/// Exact enumeration of one discrete-point family inside [0,t_max] x
/// [0,nu_max]; rational coordinates whenever the catalog is rational.
inline std::vector<TimeFrequencyPoint> enumerate_discrete_points(
    const ZeroSetDescription& zs, const ZeroComponent& c, const Scalar& t_max,
    const Scalar& nu_max) {
    std::vector<TimeFrequencyPoint> out;
    const Scalar one(1), zero(0);
    auto floor_ll = [](const Scalar& x) {
        return static_cast<long long>(x.floor().value() + 0.5);
    };
    auto ceil_ll = [&](const Scalar& x) {
        Scalar f = x.floor();
        return static_cast<long long>(f.value() + 0.5) + ((x - f).is_zero() ? 0 : 1);
    };
    switch (c.family) {
        case DiscreteFamily::small_alpha_strip_pairing: {
            Scalar gap = one - Scalar(2) * zs.alpha;
            for (long long n = 1; n <= floor_ll(nu_max * gap); ++n) {
                Scalar nu = Scalar(n) / gap;
                for (long long k = 1; k <= floor_ll(zs.alpha * nu); ++k) {
                    Scalar t = zs.alpha - Scalar(k) / nu;
                    if (!(t_max < t)) out.push_back({t, nu});
                }
            }
            break;
        }
        case DiscreteFamily::small_alpha_integer_freq: {
            for (long long n = 1; n <= floor_ll(nu_max); ++n) {
                Scalar nu(n);
                long long k0 = ceil_ll(zs.beta * nu);
                Scalar upper = (zs.beta + zs.alpha) * nu;
                long long k1 = ceil_ll(upper) - 1;  // strict k < (beta+alpha) n
                for (long long k = k0; k <= k1; ++k) {
                    Scalar t = Scalar(k) / nu - zs.beta;
                    if (!(t < zero) && !(t_max < t)) out.push_back({t, nu});
                }
            }
            break;
        }
        case DiscreteFamily::half_alpha_lattice: {
            Scalar den = Scalar(2) * zs.beta + one;
            for (long long n = 1; n <= floor_ll(nu_max * den); ++n) {
                Scalar nu = Scalar(n) / den;
                long long k0 = ceil_ll(zs.beta * nu);
                long long k1 = floor_ll((zs.beta + Scalar(1, 2)) * nu);  // closed at 1/2
                for (long long k = k0; k <= k1; ++k) {
                    Scalar t = Scalar(k) / nu - zs.beta;
                    if (!(t < zero) && !(t_max < t)) out.push_back({t, nu});
                }
            }
            break;
        }
        case DiscreteFamily::none: break;
    }
    return out;
}

/// Upper bound on the scaled box-metric distance from (t, nu) to the catalog:
/// max(|dt|/t_scale, |dnu|/nu_scale) against the nearest candidate point of
/// each component.
inline double catalog_box_distance(const ZeroSetDescription& zs, double t, double nu,
                                   double t_scale, double nu_scale) {
    double best = std::numeric_limits<double>::infinity();
    auto metric = [&](double dt, double dn) {
        return std::max(std::abs(dt) / t_scale, std::abs(dn) / nu_scale);
    };
    auto clamp_range = [&](const ZeroComponent& c, double x) {
        double lo = c.t_lo.value();
        double hi = c.t_hi ? c.t_hi->value() : std::numeric_limits<double>::max();
        return std::min(std::max(x, lo), hi);
    };
    for (const ZeroComponent& c : zs.components) {
        switch (c.kind) {
            case ZeroComponentKind::vertical_strip: {
                double tc = clamp_range(c, t);
                best = std::min(best, metric(t - tc, 0.0));
                break;
            }
            case ZeroComponentKind::hyperbola: {
                double tc = clamp_range(c, t);
                double denom = c.hyp_sign > 0 ? tc + c.hyp_c.value() : c.hyp_c.value() - tc;
                if (denom <= 0) break;
                double kreal = nu * denom;
                for (double k : {std::floor(kreal), std::ceil(kreal)}) {
                    if (k < 1) continue;
                    best = std::min(best, metric(t - tc, nu - k / denom));
                    // same-height candidate
                    double want = k / std::max(nu, 1e-9);
                    double tstar = c.hyp_sign > 0 ? want - c.hyp_c.value()
                                                  : c.hyp_c.value() - want;
                    double tcl = clamp_range(c, tstar);
                    double d2 = c.hyp_sign > 0 ? tcl + c.hyp_c.value()
                                               : c.hyp_c.value() - tcl;
                    if (d2 > 0) best = std::min(best, metric(t - tcl, nu - k / d2));
                }
                break;
            }
            case ZeroComponentKind::horizontal_lines: {
                double tc = clamp_range(c, t);
                double base = c.line_base.value();
                double m = std::round(nu / base);
                for (double mm : {m - 1, m, m + 1}) {
                    if (mm < 1) continue;
                    if (c.line_odd_only && static_cast<long long>(mm) % 2 == 0) continue;
                    best = std::min(best, metric(t - tc, nu - mm * base));
                }
                break;
            }
            case ZeroComponentKind::discrete_points: {
                double a = zs.alpha.value(), b = zs.beta.value();
                auto try_point = [&](double pt, double pn) {
                    best = std::min(best, metric(t - pt, nu - pn));
                };
                if (c.family == DiscreteFamily::small_alpha_strip_pairing) {
                    double s = 1.0 / (1.0 - 2.0 * a);
                    double n = std::round(nu / s);
                    for (double nn : {n - 1, n, n + 1}) {
                        if (nn < 1) continue;
                        double pnu = nn * s;
                        double k = std::round(pnu * (a - t));
                        for (double kk : {k - 1, k, k + 1}) {
                            if (kk < 1 || kk > pnu * a + 1e-9) continue;
                            try_point(a - kk / pnu, pnu);
                        }
                    }
                } else if (c.family == DiscreteFamily::small_alpha_integer_freq) {
                    double n = std::round(nu);
                    for (double nn : {n - 1, n, n + 1}) {
                        if (nn < 1) continue;
                        double k = std::round((t + b) * nn);
                        for (double kk : {k - 1, k, k + 1}) {
                            double r = kk / nn;
                            if (r < b - 1e-12 || r >= b + a + 1e-12) continue;
                            try_point(r - b, nn);
                        }
                    }
                } else if (c.family == DiscreteFamily::half_alpha_lattice) {
                    double den = 2.0 * b + 1.0;
                    double n = std::round(nu * den);
                    for (double nn : {n - 1, n, n + 1}) {
                        if (nn < 1) continue;
                        double pnu = nn / den;
                        double k = std::round((t + b) * pnu);
                        for (double kk : {k - 1, k, k + 1}) {
                            double r = kk / nn;  // = (k/nu - b + b)/(2b+1) scaled
                            if (r < b / den - 1e-12 || r > 0.5 + 1e-12) continue;
                            try_point(kk / pnu - b, pnu);
                        }
                    }
                }
                break;
            }
        }
    }
    return best;
}

}  // namespace gabortiles
