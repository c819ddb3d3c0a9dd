#pragma once

#include "gabortiles/tiling.hpp"

#include <cmath>
#include <optional>

namespace gabortiles {

/// Tiling/spectrality classification of the two-interval window. For the
/// union of two intervals the two properties coincide; the window tiles the
/// line exactly when (alpha < 1/2 and beta integral) or (alpha = 1/2 and
/// 2 beta integral).
struct Classification {
    bool tiles = false;
    bool spectral = false;
    std::optional<TranslationSet1D> tiling_set;
    bool tolerance_mode = false;
};

/// Exact classification needs rational inputs; floating inputs are accepted
/// only with a tolerance and the verdict is flagged tolerance_mode.
inline Classification classify_two_interval_tile(const Scalar& alpha, const Scalar& beta,
                                                 std::optional<double> tol = std::nullopt) {
    Scalar half(1, 2);
    if (!(Scalar(0) < alpha) || half < alpha)
        throw std::invalid_argument("outside normalized regime: alpha must be in (0,1/2]");
    if (!(Scalar(0) < beta)) throw std::invalid_argument("beta must be positive");

    bool exact = alpha.exact() && beta.exact();
    if (!exact && !tol)
        throw std::invalid_argument(
            "classification of floating inputs requires a tolerance");

    Classification c;
    c.tolerance_mode = !exact;
    bool alpha_half = exact ? alpha == half : std::abs(alpha.value() - 0.5) <= *tol;
    bool beta_int = beta.is_integral(exact ? 0.0 : *tol);
    bool beta_half_int = (Scalar(2) * beta).is_integral(exact ? 0.0 : 2 * *tol);

    if (!alpha_half && beta_int) {
        c.tiles = c.spectral = true;
        c.tiling_set = TranslationSet1D::integers();
    } else if (alpha_half && beta_half_int) {
        c.tiles = c.spectral = true;
        Scalar b = exact ? beta : Scalar::from_double(std::round(2 * beta.value())) / Scalar(2);
        if (b.is_integral()) {
            c.tiling_set = TranslationSet1D::integers();
        } else {
            // beta = (n-1)/2 with n even: n Z u (n Z + 1/2) u ... u (n Z + (n-1)/2)
            Scalar n = Scalar(2) * b + Scalar(1);
            TranslationSet1D set;
            for (Scalar j(0); j < n; j += Scalar(1))
                set = unite(set, TranslationSet1D::lattice(n, j / Scalar(2)));
            c.tiling_set = set;
        }
    }
    return c;
}

namespace detail {

/// A set of disjoint arcs [a,b) on the circle [0, p), kept sorted.
struct CircleCover {
    Scalar period;
    std::vector<Interval> arcs;

    Scalar covered_measure() const {
        Scalar m(0);
        for (const Interval& a : arcs) m += a.length();
        return m;
    }

    /// First uncovered point scanning from 0, or nullopt when full.
    std::optional<Scalar> first_gap() const {
        Scalar cur(0);
        for (const Interval& a : arcs) {
            if (cur < a.lo) return cur;
            cur = max(cur, a.hi);
        }
        if (cur < period) return cur;
        return std::nullopt;
    }

    /// Adds arcs if disjoint from the current cover; returns false (and
    /// leaves the cover unchanged) on any overlap.
    bool add_disjoint(const std::vector<Interval>& pieces) {
        for (const Interval& q : pieces)
            for (const Interval& a : arcs)
                if (a.lo < q.hi && q.lo < a.hi) return false;
        arcs.insert(arcs.end(), pieces.begin(), pieces.end());
        std::sort(arcs.begin(), arcs.end(),
                  [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
        return true;
    }

};

/// A mod p as arcs on [0, p); nullopt when the periodization has
/// multiplicity >= 2 somewhere (then no period-p coset tiling can exist).
inline std::optional<std::vector<Interval>> periodize(const IntervalUnion& a,
                                                      const Scalar& p) {
    std::vector<Interval> pieces;
    for (const Interval& part : a.parts()) {
        Scalar lo = part.lo, hi = part.hi;
        Scalar base = (lo / p).floor() * p;
        lo -= base;
        hi -= base;
        while (Scalar(0) < hi) {
            Scalar cut_lo = max(lo, Scalar(0)), cut_hi = min(hi, p);
            if (cut_lo < cut_hi) pieces.push_back({cut_lo, cut_hi});
            lo -= p;
            hi -= p;
        }
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        if (pieces[i + 1].lo < pieces[i].hi) return std::nullopt;
    return pieces;
}

inline std::vector<Interval> rotate_arcs(const std::vector<Interval>& arcs, const Scalar& o,
                                         const Scalar& p) {
    std::vector<Interval> out;
    for (const Interval& a : arcs) {
        Scalar lo = a.lo + o, hi = a.hi + o;
        Scalar base = (lo / p).floor() * p;
        lo -= base;
        hi -= base;
        if (hi < p || hi == p) {
            out.push_back({lo, hi});
        } else {
            out.push_back({lo, p});
            out.push_back({Scalar(0), hi - p});
        }
    }
    return out;
}

inline bool coset_tiling_dfs(const std::vector<Interval>& shape, const Scalar& p,
                             CircleCover& cover, std::vector<Scalar>& offsets,
                             size_t needed) {
    std::optional<Scalar> gap = cover.first_gap();
    if (!gap) return offsets.size() == needed;
    if (offsets.size() == needed) return false;
    // The translate covering the leftmost gap must have a rising edge there.
    for (const Interval& piece : shape) {
        Scalar o = ((*gap - piece.lo) / p).frac() * p;  // reduce mod p into [0,p)
        std::vector<Interval> rotated = rotate_arcs(shape, o, p);
        CircleCover snapshot = cover;
        if (!cover.add_disjoint(rotated)) continue;
        offsets.push_back(o);
        if (coset_tiling_dfs(shape, p, cover, offsets, needed)) return true;
        offsets.pop_back();
        cover = snapshot;
    }
    return false;
}

}  // namespace detail

/// Bounded search for a periodic coset tiling of the line by A: periods
/// 1..max_period, at most max_offsets cosets. Exhaustive within those bounds
/// (the translate covering the leftmost gap must start there), exact in
/// rational arithmetic. A negative answer is desk-scale evidence only.
inline std::optional<TranslationSet1D> find_coset_tiling(const IntervalUnion& a,
                                                         int max_period = 4,
                                                         int max_offsets = 8) {
    if (a.is_empty() || a.mode() != NumberMode::rational) return std::nullopt;
    Scalar m = a.measure();
    for (int p = 1; p <= max_period; ++p) {
        Scalar period(p);
        Scalar count = period / m;
        if (!count.is_integral()) continue;
        long long needed = static_cast<long long>(count.value() + 0.5);
        if (needed < 1 || needed > max_offsets) continue;
        auto shape = detail::periodize(a, period);
        if (!shape || shape->empty()) continue;
        detail::CircleCover cover{period, {}};
        std::vector<Scalar> offsets;
        if (detail::coset_tiling_dfs(*shape, period, cover, offsets,
                                     static_cast<size_t>(needed))) {
            std::vector<Coset> cosets;
            for (const Scalar& o : offsets) cosets.push_back({period, o});
            return TranslationSet1D({}, std::move(cosets));
        }
    }
    return std::nullopt;
}

/// Verdict-agreement check for two unit-mass nonnegative functions already
/// known to pack against the same translation measure: evaluates both
/// periodized sums on a grid and reports whether the "identically 1"
/// verdicts coincide within tol.
struct TilingEquivalence {
    bool f_tiles = false;
    bool g_tiles = false;
    bool agree = false;
    double f_min = 0, f_max = 0, g_min = 0, g_max = 0;
};

inline TilingEquivalence unit_mass_tiling_equivalence(
    const std::function<double(double, double)>& conv_f,
    const std::function<double(double, double)>& conv_g, double x0, double x1, double y0,
    double y1, int nx, int ny, double tol) {
    TilingEquivalence r;
    bool first = true;
    for (int i = 0; i < nx; ++i) {
        double x = x0 + (x1 - x0) * (i + 0.5) / nx;
        for (int j = 0; j < ny; ++j) {
            double y = y0 + (y1 - y0) * (j + 0.5) / ny;
            double f = conv_f(x, y), g = conv_g(x, y);
            if (first) {
                r.f_min = r.f_max = f;
                r.g_min = r.g_max = g;
                first = false;
            } else {
                r.f_min = std::min(r.f_min, f);
                r.f_max = std::max(r.f_max, f);
                r.g_min = std::min(r.g_min, g);
                r.g_max = std::max(r.g_max, g);
            }
        }
    }
    r.f_tiles = r.f_min >= 1.0 - tol && r.f_max <= 1.0 + tol;
    r.g_tiles = r.g_min >= 1.0 - tol && r.g_max <= 1.0 + tol;
    r.agree = r.f_tiles == r.g_tiles;
    return r;
}

}  // namespace gabortiles
