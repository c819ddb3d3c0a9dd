#pragma once

#include "gabortiles/classify.hpp"
#include "gabortiles/fourier.hpp"
#include "gabortiles/parallel.hpp"
#include "gabortiles/tiling.hpp"
#include "gabortiles/zeroset.hpp"

#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace gabortiles {

/// Frequency block set for the equal-interval window: union over k of
/// [2k/(2 beta+1), (2k+1)/(2 beta+1)) for k = 0..floor(2 beta), plus the
/// fractional filler block when 2 beta is not an integer.
inline IntervalUnion half_case_frequency_factor(const Scalar& beta) {
    const Scalar one(1), two(2);
    Scalar den = two * beta + one;
    Scalar two_beta = two * beta;
    std::vector<Interval> parts;
    bool half_integral =
        beta.exact() ? is_half_integer(beta.rat()) : two_beta.is_integral(1e-9);
    Scalar kmax = two_beta.floor();
    for (Scalar k(0); !(kmax < k); k += one)
        parts.push_back({two * k / den, (two * k + one) / den});
    if (!half_integral) {
        Scalar start = two * (kmax + one) / den;
        parts.push_back({start, start + two_beta.frac() / den});
    }
    return IntervalUnion::normalize(std::move(parts), true);
}

struct PackingRegion {
    ProductRegion2D region;
    bool tight = true;
    std::string regime;  // "alpha_lt_half" | "alpha_half_block" | "alpha_half_filler"
};

/// The tight orthogonal packing region for the window: Omega x [0,1) when
/// alpha < 1/2, and Omega x (frequency blocks) when alpha = 1/2, beta >= 1/2.
/// The case alpha = 1/2, beta < 1/2 has no known tight region and errors.
inline PackingRegion tight_packing_region(const WindowParams& w) {
    const Scalar one(1), half(1, 2);
    if (!w.alpha_is_half()) {
        return {ProductRegion2D(w.set(), IntervalUnion::single(Scalar(0), one)), true,
                "alpha_lt_half"};
    }
    if (w.beta() < half)
        throw std::invalid_argument(
            "no tight region known for alpha = 1/2, beta < 1/2 (open case)");
    IntervalUnion freq = half_case_frequency_factor(w.beta());
    bool block = w.beta().exact() ? is_half_integer(w.beta().rat())
                                  : (Scalar(2) * w.beta()).is_integral(1e-9);
    PackingRegion r{ProductRegion2D(w.set(), freq), true,
                    block ? "alpha_half_block" : "alpha_half_filler"};
    Scalar m = r.region.measure();
    if (m.exact() ? !(m == one) : std::abs(m.value() - 1.0) > 1e-12)
        throw std::logic_error("tight packing region must have measure 1");
    return r;
}

namespace detail {

/// A point of seg n [lo, hi] (hi absent = unbounded), honoring the segment's
/// endpoint openness; nullopt when the intersection is empty.
inline std::optional<Scalar> seg_range_point(const QuadrantSeg& seg, const Scalar& lo,
                                             const std::optional<Scalar>& hi) {
    Scalar a = max(seg.lo, lo);
    Scalar b = hi ? min(seg.hi, *hi) : seg.hi;
    if (a < b) return (a + b) / Scalar(2);
    if (seg.contains(a) && !(hi && *hi < a)) return a;
    if (hi && seg.contains(*hi) && !(*hi < lo)) return *hi;
    return std::nullopt;
}

}  // namespace detail

/// Result of checking (D int - D int) n Z(V_g g) = empty: symbolic search
/// against the catalog (for regimes that have one) plus random spot checks
/// of the closed form over the difference product.
struct PackingRegionCheck {
    bool catalog_available = false;
    bool catalog_intersection_empty = false;
    std::vector<TimeFrequencyPoint> catalog_hits;
    int spot_checks = 0;
    double spot_min_abs = 0.0;
    bool spot_passed = false;
    bool passed = false;
};

inline PackingRegionCheck verify_packing_region(const WindowParams& w,
                                                const PackingRegion& pr,
                                                int spot_checks = 10000,
                                                double spot_threshold = 1e-10,
                                                unsigned long long seed = 20240901ull) {
    PackingRegionCheck out;
    const ProductRegion2D& region = pr.region;
    IntervalUnion diff_t = open_difference_set(region.time_factor());
    IntervalUnion diff_nu = open_difference_set(region.freq_factor());
    std::vector<QuadrantSeg> segs_t = quadrant_reduce(diff_t);
    std::vector<QuadrantSeg> segs_nu = quadrant_reduce(diff_nu);
    Scalar nu_sup(0);
    for (const QuadrantSeg& s : segs_nu) nu_sup = max(nu_sup, s.hi);
    Scalar t_sup(0);
    for (const QuadrantSeg& s : segs_t) t_sup = max(t_sup, s.hi);

    std::optional<ZeroSetDescription> zs;
    bool beta_int = w.beta().exact() ? is_integer(w.beta().rat()) : w.beta().is_integral(1e-9);
    bool beta_half = w.beta().exact() ? is_half_integer(w.beta().rat())
                                      : (Scalar(2) * w.beta()).is_integral(1e-9);
    if (!w.alpha_is_half() && beta_int) zs = zero_set_alpha_lt_half(w.alpha(), w.beta());
    if (w.alpha_is_half() && beta_half && !(w.beta() < Scalar(1, 2)))
        zs = zero_set_alpha_half(w.beta());

    if (zs) {
        out.catalog_available = true;
        bool exact_inputs = w.alpha().exact() && w.beta().exact();
        auto record_hit = [&](const Scalar& t, const Scalar& nu) {
            TimeFrequencyPoint p{t, nu};
            if (contains(*zs, p, exact_inputs && t.exact() && nu.exact() ? 0.0 : 1e-12))
                out.catalog_hits.push_back(p);
        };
        std::optional<Scalar> nu_low;  // smallest frequency in the nu quadrant
        for (const QuadrantSeg& sn : segs_nu) {
            Scalar v = sn.lo_closed ? sn.lo : (sn.lo + sn.hi) / Scalar(2);
            if (!nu_low || v < *nu_low) nu_low = v;
        }

        for (const ZeroComponent& c : zs->components) {
            switch (c.kind) {
                case ZeroComponentKind::vertical_strip: {
                    for (const QuadrantSeg& st : segs_t) {
                        auto t = detail::seg_range_point(st, c.t_lo, c.t_hi);
                        if (t && nu_low) record_hit(*t, *nu_low);
                    }
                    break;
                }
                case ZeroComponentKind::hyperbola: {
                    for (const QuadrantSeg& st : segs_t) {
                        Scalar lo = max(st.lo, c.t_lo);
                        Scalar hi = c.t_hi ? min(st.hi, *c.t_hi) : st.hi;
                        if (!(lo < hi)) continue;
                        Scalar d_lo = c.hyperbola_denom(lo), d_hi = c.hyperbola_denom(hi);
                        Scalar dmin = max(min(d_lo, d_hi), Scalar(0));
                        Scalar dmax = max(d_lo, d_hi);
                        if (!(Scalar(0) < dmax)) continue;
                        long long kmax = static_cast<long long>(
                            std::floor(nu_sup.value() * dmax.value()) + 1);
                        for (long long k = 1; k <= kmax; ++k) {
                            Scalar img_lo = Scalar(k) / dmax;
                            for (const QuadrantSeg& sn : segs_nu) {
                                Scalar a = max(img_lo, sn.lo);
                                Scalar b = sn.hi;
                                if (Scalar(0) < dmin) b = min(b, Scalar(k) / dmin);
                                if (!(a < b)) continue;
                                Scalar nu = (a + b) / Scalar(2);
                                if (!sn.contains(nu)) continue;
                                Scalar denom = Scalar(k) / nu;
                                Scalar t =
                                    c.hyp_sign > 0 ? denom - c.hyp_c : c.hyp_c - denom;
                                if (lo < t && t < hi && st.contains(t)) record_hit(t, nu);
                            }
                        }
                    }
                    break;
                }
                case ZeroComponentKind::horizontal_lines: {
                    for (const QuadrantSeg& st : segs_t) {
                        auto t = detail::seg_range_point(st, c.t_lo, c.t_hi);
                        if (!t) continue;
                        long long mmax = static_cast<long long>(
                            std::floor(nu_sup.value() / c.line_base.value()) + 1);
                        for (long long m = 1; m <= mmax; m += c.line_odd_only ? 2 : 1) {
                            Scalar nu = Scalar(m) * c.line_base;
                            for (const QuadrantSeg& sn : segs_nu)
                                if (sn.contains(nu)) record_hit(*t, nu);
                        }
                    }
                    break;
                }
                case ZeroComponentKind::discrete_points: {
                    for (const TimeFrequencyPoint& p :
                         enumerate_discrete_points(*zs, c, t_sup, nu_sup)) {
                        bool in_t = false, in_nu = false;
                        for (const QuadrantSeg& st : segs_t)
                            in_t = in_t || st.contains(p.t);
                        for (const QuadrantSeg& sn : segs_nu)
                            in_nu = in_nu || sn.contains(p.nu);
                        if (in_t && in_nu) record_hit(p.t, p.nu);
                    }
                    break;
                }
            }
        }
        out.catalog_intersection_empty = out.catalog_hits.empty();
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto sample_open = [&](const IntervalUnion& u) {
        double total = u.measure().value();
        double pick = unit(rng) * total, acc = 0.0;
        for (const Interval& p : u.parts()) {
            double len = p.length().value();
            if (pick <= acc + len)
                return p.lo.value() + std::min(std::max(pick - acc, 1e-12), len - 1e-12);
            acc += len;
        }
        const Interval& last = u.parts().back();
        return last.hi.value() - 1e-12;
    };
    out.spot_checks = spot_checks;
    std::vector<double> mins(static_cast<size_t>(spot_checks));
    std::vector<std::pair<double, double>> pts(static_cast<size_t>(spot_checks));
    for (int i = 0; i < spot_checks; ++i)
        pts[i] = {std::abs(sample_open(diff_t)), std::abs(sample_open(diff_nu))};
    parallel_for(spot_checks, [&](long long i) {
        mins[i] = std::abs(stft_auto(w, Scalar::from_double(pts[i].first),
                                     Scalar::from_double(pts[i].second)));
    });
    double min_abs = std::numeric_limits<double>::infinity();
    for (double v : mins) min_abs = std::min(min_abs, v);
    out.spot_min_abs = min_abs;
    out.spot_passed = min_abs > spot_threshold;
    out.passed =
        out.spot_passed && (!out.catalog_available || out.catalog_intersection_empty);
    return out;
}

/// A window together with its set of time-frequency shifts.
struct GaborSystem {
    WindowParams window;
    TranslationSet2D lattice;
};

/// Pairwise-orthogonality verdict over a window of lattice points. Every
/// distinct difference is reduced to the quadrant and evaluated in closed
/// form; all violations (capped) are reported.
struct OrthogonalityReport {
    bool orthogonal = false;
    std::vector<std::pair<TimeFrequencyPoint, double>> violations;
    size_t points_checked = 0;
    size_t differences_checked = 0;
    double max_offending = 0.0;
};

inline OrthogonalityReport check_orthogonality(const GaborSystem& sys, const Box2D& box,
                                               double tol = 1e-9,
                                               size_t max_violations = 64) {
    OrthogonalityReport rep;
    auto pts = sys.lattice.enumerate(box.x0, box.x1, box.y0, box.y1);
    rep.points_checked = pts.size();
    std::set<std::pair<Scalar, Scalar>> seen;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Scalar dt = (pts[j].first - pts[i].first).abs();
            Scalar dnu = (pts[j].second - pts[i].second).abs();
            if (!seen.insert({dt, dnu}).second) continue;
            double v = std::abs(stft_auto(sys.window, dt, dnu));
            if (v > tol) {
                rep.max_offending = std::max(rep.max_offending, v);
                if (rep.violations.size() < max_violations)
                    rep.violations.push_back({{dt, dnu}, v});
            }
        }
    }
    rep.differences_checked = seen.size();
    rep.orthogonal = rep.violations.empty();
    return rep;
}

/// Truncated frame sum sum_lambda |V_g g(omega - lambda)|^2 with a certified
/// tail bound. Fibers outside |t| < 1+beta contribute exactly zero; for each
/// contributing fiber the frequency sum keeps `freq_trunc` lattice indices
/// around omega_nu per coset and bounds the rest by the 1/(pi nu) decay of
/// each overlap part.
struct FrameSum {
    double value = 0.0;
    double tail_bound = 0.0;
};

inline FrameSum frame_sum(const WindowParams& w, const TranslationSet2D& lam,
                          const TimeFrequencyPoint& omega, int freq_trunc = 200) {
    if (freq_trunc < 1) throw std::invalid_argument("freq_trunc must be positive");
    FrameSum fs;
    Scalar reach = Scalar(1) + w.beta();
    IntervalUnion omega_set = w.set();
    for (const Fiber& f : lam.fibers_in(omega.t - reach, omega.t + reach)) {
        Scalar dt = omega.t - f.t;
        IntervalUnion ov = intersect(omega_set, translate(omega_set, dt), true);
        if (ov.is_empty()) continue;
        int parts = static_cast<int>(ov.parts().size());
        std::vector<Scalar> kept(f.freq.points());
        for (const Coset& c : f.freq.cosets()) {
            Scalar m0 = ((omega.nu - c.offset) / c.period).floor();
            for (long long m = -freq_trunc; m <= freq_trunc; ++m)
                kept.push_back(c.offset + (m0 + Scalar(m)) * c.period);
            // distances to the first excluded translate above and below
            double gap = c.period.value();
            double r_up =
                ((m0 + Scalar(freq_trunc + 1)) * c.period + c.offset - omega.nu).value();
            double r_dn =
                (omega.nu - (m0 - Scalar(freq_trunc + 1)) * c.period - c.offset).value();
            double coef = static_cast<double>(parts) / kPi;
            coef *= coef;
            fs.tail_bound += coef * (1.0 / (r_up * r_up) + 1.0 / (gap * r_up));
            fs.tail_bound += coef * (1.0 / (r_dn * r_dn) + 1.0 / (gap * r_dn));
        }
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        for (const Scalar& y : kept) {
            double v = std::abs(ft_indicator(ov, omega.nu - y));
            fs.value += v * v;
        }
    }
    return fs;
}

/// Certification of a Gabor system as an orthonormal basis at desk scale:
/// pairwise orthogonality on the window plus an exact tiling verdict for the
/// tight packing region, with frame-sum spot checks recorded alongside.
struct CertificationReport {
    Scalar alpha, beta;
    std::string regime;
    bool classification_tiles = false;
    OrthogonalityReport orthogonality;
    Verdict tiling;
    bool certified = false;
    std::vector<double> frame_values;
    std::vector<double> frame_tails;
};

struct CertifyOptions {
    double tol = 1e-9;
    int frame_spot_checks = 0;
    int freq_trunc = 200;
    unsigned long long seed = 7043ull;
};

inline CertificationReport certify_basis(const GaborSystem& sys, const Box2D& box,
                                         const CertifyOptions& opt = {}) {
    CertificationReport rep;
    rep.alpha = sys.window.alpha();
    rep.beta = sys.window.beta();
    PackingRegion pr = tight_packing_region(sys.window);  // throws on the open case
    rep.regime = pr.regime;

    bool exact = rep.alpha.exact() && rep.beta.exact();
    Classification cls = classify_two_interval_tile(
        rep.alpha, rep.beta, exact ? std::nullopt : std::optional<double>(1e-9));
    rep.classification_tiles = cls.tiles;

    rep.orthogonality = check_orthogonality(sys, box, opt.tol);

    Scalar mx = pr.region.x_hi() - pr.region.x_lo();
    Scalar my = pr.region.y_hi() - pr.region.y_lo();
    rep.tiling = check_tiling_2d(pr.region, sys.lattice, box, mx, my, true);

    rep.certified = rep.orthogonality.orthogonal && rep.tiling.is_tiling();
    if (rep.certified && !rep.classification_tiles)
        throw std::logic_error(
            "certified basis for a window that is not a tile: cross-module contradiction");

    if (opt.frame_spot_checks > 0) {
        std::mt19937_64 rng(opt.seed);
        double ax = box.x0.value() + mx.value(), bx = box.x1.value() - mx.value();
        double ay = box.y0.value() + my.value(), by = box.y1.value() - my.value();
        if (!(ax < bx)) std::swap(ax, bx);
        if (!(ay < by)) std::swap(ay, by);
        std::uniform_real_distribution<double> ux(ax, bx);
        std::uniform_real_distribution<double> uy(ay, by);
        for (int i = 0; i < opt.frame_spot_checks; ++i) {
            TimeFrequencyPoint om{Scalar::from_double(ux(rng)), Scalar::from_double(uy(rng))};
            FrameSum fsum = frame_sum(sys.window, sys.lattice, om, opt.freq_trunc);
            rep.frame_values.push_back(fsum.value);
            rep.frame_tails.push_back(fsum.tail_bound);
        }
    }
    return rep;
}

/// Standard lattice for alpha < 1/2: union over k of {k} x (Z + a_k), with
/// phases a_k in [0,1) given per residue class modulo their count; the
/// resulting set is declared t-periodic with that period.
inline TranslationSet2D standard_lattice_small_alpha(const Scalar& beta,
                                                     const std::vector<Scalar>& phases) {
    if (beta.exact() ? !is_integer(beta.rat()) : !beta.is_integral(1e-9))
        throw std::invalid_argument("standard lattice needs beta a positive integer");
    if (phases.empty()) throw std::invalid_argument("need at least one phase");
    for (const Scalar& a : phases)
        if (a < Scalar(0) || !(a < Scalar(1)))
            throw std::invalid_argument("phases must lie in [0,1)");
    std::vector<Fiber> fibers;
    int m = static_cast<int>(phases.size());
    for (int j = 0; j < m; ++j)
        fibers.push_back({Scalar(j), TranslationSet1D::lattice(Scalar(1), phases[j])});
    return TranslationSet2D(std::move(fibers), Scalar(m));
}

/// Structured failure of one of the standard-lattice conditions.
class ConditionViolation : public std::runtime_error {
public:
    ConditionViolation(std::string condition, const std::string& what)
        : std::runtime_error("condition (" + condition + ") fails: " + what),
          condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

/// Construction report for the equal-interval standard lattice: both forms
/// of the time condition are verified (the integer-scale tiling and the
/// induced half-integer cover by the window itself) along with the per-class
/// frequency condition.
struct HalfCaseLattice {
    TranslationSet2D lattice;
    Verdict time_condition;        // [0,1) u [2b+1, 2b+2) + K tiles R
    Verdict time_condition_half;   // Omega + K/2 tiles R
    std::vector<Verdict> freq_conditions;  // per phase class: blocks + L_k tile R
};

/// Standard lattice for alpha = 1/2, beta in (1/2)N:
///   Lambda = union over k in K of {k/2} x ((L_k + a_k)/(2 beta + 1)).
/// K, L and phases are given per residue class of k modulo `k_period`
/// (K itself as an explicit integer translation set). Condition (iii)
/// [K u ((2 beta+1)+K) = Z, checked as an exact interval tiling] and
/// condition (iv) [L_k + {2n : n = 0..2 beta} = Z] are verified by sweeps
/// before the lattice is assembled; violations throw ConditionViolation.
inline HalfCaseLattice standard_lattice_half_alpha(const Scalar& beta,
                                                   const TranslationSet1D& K,
                                                   long long k_period,
                                                   const std::vector<TranslationSet1D>& L,
                                                   const std::vector<Scalar>& phases,
                                                   int check_window = 24) {
    if (beta.exact() ? !is_half_integer(beta.rat())
                     : !(Scalar(2) * beta).is_integral(1e-9))
        throw std::invalid_argument("needs beta in (1/2)N");
    if (beta < Scalar(1, 2)) throw std::invalid_argument("needs beta >= 1/2");
    if (k_period <= 0 || L.size() != static_cast<size_t>(k_period) ||
        phases.size() != static_cast<size_t>(k_period))
        throw std::invalid_argument("L and phases must cover k_period residue classes");
    for (const Scalar& a : phases)
        if (a < Scalar(0) || !(a < Scalar(1)))
            throw std::invalid_argument("phases must lie in [0,1)");

    const Scalar one(1), two(2);
    Scalar den = two * beta + one;  // integer since 2 beta is
    HalfCaseLattice out;

    // (iii) as stated: {0, 2b+1} + K = Z <=> [0,1) u [2b+1, 2b+2) + K tiles R.
    IntervalUnion two_cells = IntervalUnion::normalize(
        {{Scalar(0), one}, {den, den + one}}, true);
    Interval win{Scalar(-check_window), Scalar(check_window)};
    Scalar margin = den + one;
    out.time_condition = check_tiling_1d(two_cells, K, win, margin);
    if (!out.time_condition.is_tiling())
        throw ConditionViolation("iii", "K u ((2 beta+1)+K) does not tile Z");

    // induced half-integer cover: Omega + K/2 = R.
    WindowParams w(Scalar(1, 2), beta);
    out.time_condition_half =
        check_tiling_1d(w.set(), K.scaled(Scalar(1, 2)), win, (one + beta));
    if (!out.time_condition_half.is_tiling())
        throw ConditionViolation("iii", "Omega + K/2 does not tile the line");

    // (iv) per class: union of [2n, 2n+1) for n = 0..2 beta, + L_k = Z.
    std::vector<Interval> blocks;
    for (Scalar n(0); !(two * beta < n); n += one)
        blocks.push_back({two * n, two * n + one});
    IntervalUnion block_set = IntervalUnion::normalize(std::move(blocks), true);
    Scalar bmargin = block_set.diameter();
    Interval bwin{Scalar(-4) * bmargin, Scalar(4) * bmargin};
    for (long long j = 0; j < k_period; ++j) {
        Verdict v = check_tiling_1d(block_set, L[static_cast<size_t>(j)], bwin, bmargin);
        out.freq_conditions.push_back(v);
        if (!v.is_tiling())
            throw ConditionViolation(
                "iv", "L_" + std::to_string(j) + " + {2n : n = 0..2 beta} does not tile Z");
    }

    // Assemble fibers: k in K within one K-period band, declared periodic.
    Scalar t_period = Scalar(k_period) / two;
    std::vector<Fiber> fibers;
    for (const Scalar& k : K.enumerate(Scalar(0), Scalar(k_period) - one)) {
        if (!k.is_integral())
            throw std::invalid_argument("K must consist of integers");
        if (!K.contains(k + Scalar(k_period)))
            throw std::invalid_argument("K must be periodic with period k_period");
        long long kk = static_cast<long long>(k.value() + (k.value() < 0 ? -0.5 : 0.5));
        long long j = ((kk % k_period) + k_period) % k_period;
        TranslationSet1D freq = L[static_cast<size_t>(j)]
                                    .translated(phases[static_cast<size_t>(j)])
                                    .scaled(one / den);
        fibers.push_back({k / two, std::move(freq)});
    }
    out.lattice = TranslationSet2D(std::move(fibers), t_period);
    return out;
}

}  // namespace gabortiles
