#pragma once

#include "gabortiles/interval.hpp"
#include "gabortiles/translation_set.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gabortiles {

enum class CoverageStatus { packing_strict, tiling, overlap, gap };

inline const char* coverage_status_name(CoverageStatus s) {
    switch (s) {
        case CoverageStatus::packing_strict: return "packing_strict";
        case CoverageStatus::tiling: return "tiling";
        case CoverageStatus::overlap: return "overlap";
        case CoverageStatus::gap: return "gap";
    }
    return "?";
}

/// Outcome of a coverage check. `witness` is present exactly for overlap/gap
/// and pins a point where the multiplicity differs from 1; the coverage there
/// is recomputable and recorded in `witness_coverage`.
struct Verdict {
    CoverageStatus status = CoverageStatus::gap;
    std::optional<std::vector<Scalar>> witness;
    int witness_coverage = -1;
    std::vector<Scalar> checked_window;  // shrunk window: [lo,hi] or [x0,x1,y0,y1]
    std::vector<Scalar> margin;
    std::string note;

    bool passes_packing() const {
        return status == CoverageStatus::tiling || status == CoverageStatus::packing_strict;
    }
    bool is_tiling() const { return status == CoverageStatus::tiling; }
};

using StepFunction = std::vector<std::pair<Interval, int>>;  // consecutive slabs

namespace detail {

struct Event {
    Scalar x;
    int delta;
};

inline StepFunction profile_from_events(std::vector<Event> events, const Scalar& lo,
                                        const Scalar& hi) {
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.x < b.x; });
    StepFunction out;
    Scalar cur = lo;
    int count = 0;
    size_t i = 0;
    while (i < events.size()) {
        Scalar x = events[i].x;
        if (cur < x) {
            out.push_back({Interval{cur, x}, count});
            cur = x;
        }
        while (i < events.size() && events[i].x == x) {
            count += events[i].delta;
            ++i;
        }
    }
    if (cur < hi) out.push_back({Interval{cur, hi}, count});
    return out;
}

}  // namespace detail

/// Exact multiplicity function sum_lambda chi_{A + lambda} restricted to the
/// window, computed by endpoint sweep. Counts are exact integers in rational
/// mode.
inline StepFunction coverage_profile_1d(const IntervalUnion& a, const TranslationSet1D& lam,
                                        const Interval& window) {
    if (!(window.lo < window.hi)) throw std::invalid_argument("empty window");
    if (a.is_empty()) return {{window, 0}};
    Scalar shift_lo = window.lo - a.upper_bound();
    Scalar shift_hi = window.hi - a.lower_bound();
    std::vector<detail::Event> events;
    for (const Scalar& l : lam.enumerate(shift_lo, shift_hi)) {
        for (const Interval& p : a.parts()) {
            Scalar lo = max(p.lo + l, window.lo);
            Scalar hi = min(p.hi + l, window.hi);
            if (lo < hi) {
                events.push_back({lo, +1});
                events.push_back({hi, -1});
            }
        }
    }
    return detail::profile_from_events(std::move(events), window.lo, window.hi);
}

namespace detail {

/// Slabs narrower than this fraction of the window are ignored in floating
/// mode, where endpoints that coincide mathematically may differ by ulps.
inline bool negligible_slab(const Interval& slab, const Scalar& width, bool exact) {
    if (exact) return false;
    return slab.length().value() < 1e-12 * width.value();
}

inline Verdict judge_profile(const StepFunction& profile, const Interval& shrunk,
                             bool require_tiling, bool exact,
                             std::vector<Scalar> window_desc, std::vector<Scalar> margin) {
    Verdict v;
    v.checked_window = std::move(window_desc);
    v.margin = std::move(margin);
    if (!exact) v.note = "floating mode: slabs narrower than 1e-12 of the window ignored";
    Scalar width = shrunk.hi - shrunk.lo;
    bool all_one = true;
    for (const auto& [slab, count] : profile) {
        Scalar lo = max(slab.lo, shrunk.lo), hi = min(slab.hi, shrunk.hi);
        if (!(lo < hi)) continue;
        if (negligible_slab(Interval{lo, hi}, width, exact)) continue;
        if (count == 1) continue;
        all_one = false;
        bool bad = count > 1 || require_tiling;
        if (bad) {
            v.status = count > 1 ? CoverageStatus::overlap : CoverageStatus::gap;
            v.witness = std::vector<Scalar>{(lo + hi) / Scalar(2)};
            v.witness_coverage = count;
            return v;
        }
    }
    v.status = all_one ? CoverageStatus::tiling : CoverageStatus::packing_strict;
    return v;
}

}  // namespace detail

inline Verdict check_coverage_1d(const IntervalUnion& a, const TranslationSet1D& lam,
                                 const Interval& window, const Scalar& margin,
                                 bool require_tiling) {
    if (a.is_empty()) throw std::invalid_argument("empty region");
    if (margin < a.diameter())
        throw std::invalid_argument("insufficient margin: need at least the region diameter");
    Interval shrunk{window.lo + margin, window.hi - margin};
    if (!(shrunk.lo < shrunk.hi))
        throw std::invalid_argument("window too small for the requested margin");
    StepFunction profile = coverage_profile_1d(a, lam, window);
    bool exact = true;
    for (const auto& [slab, count] : profile)
        exact = exact && slab.lo.exact() && slab.hi.exact();
    return detail::judge_profile(profile, shrunk, require_tiling, exact,
                                 {shrunk.lo, shrunk.hi}, {margin});
}

inline Verdict check_packing_1d(const IntervalUnion& a, const TranslationSet1D& lam,
                                const Interval& window, const Scalar& margin) {
    return check_coverage_1d(a, lam, window, margin, false);
}

inline Verdict check_tiling_1d(const IntervalUnion& a, const TranslationSet1D& lam,
                               const Interval& window, const Scalar& margin) {
    return check_coverage_1d(a, lam, window, margin, true);
}

/// Axis-aligned rectangle [x.lo,x.hi) x [y.lo,y.hi).
struct Rect {
    Interval x, y;
};

/// Bounded planar region: a time-factor x frequency-factor product, or an
/// explicit list of pairwise disjoint rectangles.
class ProductRegion2D {
public:
    ProductRegion2D(IntervalUnion time_factor, IntervalUnion freq_factor)
        : time_(std::move(time_factor)), freq_(std::move(freq_factor)) {
        if (time_->is_empty() || freq_->is_empty())
            throw std::invalid_argument("empty region factor");
        for (const Interval& px : time_->parts())
            for (const Interval& py : freq_->parts()) rects_.push_back({px, py});
    }

    explicit ProductRegion2D(std::vector<Rect> rects) : rects_(std::move(rects)) {
        if (rects_.empty()) throw std::invalid_argument("empty rectangle list");
        for (size_t i = 0; i < rects_.size(); ++i)
            for (size_t j = i + 1; j < rects_.size(); ++j) {
                const Rect& a = rects_[i];
                const Rect& b = rects_[j];
                bool x_meet = a.x.lo < b.x.hi && b.x.lo < a.x.hi;
                bool y_meet = a.y.lo < b.y.hi && b.y.lo < a.y.hi;
                if (x_meet && y_meet)
                    throw std::invalid_argument("rectangles must be pairwise disjoint");
            }
    }

    const std::vector<Rect>& rects() const { return rects_; }
    bool has_factors() const { return time_.has_value(); }
    const IntervalUnion& time_factor() const { return *time_; }
    const IntervalUnion& freq_factor() const { return *freq_; }

    Scalar measure() const {
        Scalar m(0);
        for (const Rect& r : rects_) m += r.x.length() * r.y.length();
        return m;
    }

    Scalar x_lo() const { return bound(true, true); }
    Scalar x_hi() const { return bound(true, false); }
    Scalar y_lo() const { return bound(false, true); }
    Scalar y_hi() const { return bound(false, false); }

private:
    Scalar bound(bool x_axis, bool lower) const {
        Scalar best = x_axis ? (lower ? rects_[0].x.lo : rects_[0].x.hi)
                             : (lower ? rects_[0].y.lo : rects_[0].y.hi);
        for (const Rect& r : rects_) {
            Scalar v = x_axis ? (lower ? r.x.lo : r.x.hi) : (lower ? r.y.lo : r.y.hi);
            best = lower ? min(best, v) : max(best, v);
        }
        return best;
    }

    std::optional<IntervalUnion> time_, freq_;
    std::vector<Rect> rects_;
};

struct Box2D {
    Scalar x0, x1, y0, y1;
};

/// Rectangle sweep: x-slabs between consecutive endpoints, exact 1-D interval
/// counting in y within each slab. A tiling verdict certifies coverage == 1
/// on the margin-shrunk window only; with a declared fiber period this
/// extends globally by periodicity.
inline Verdict check_tiling_2d(const ProductRegion2D& region, const TranslationSet2D& lam,
                               const Box2D& window, const Scalar& margin_x,
                               const Scalar& margin_y, bool require_tiling = true) {
    Scalar rx0 = region.x_lo(), rx1 = region.x_hi(), ry0 = region.y_lo(), ry1 = region.y_hi();
    if (margin_x < rx1 - rx0 || margin_y < ry1 - ry0)
        throw std::invalid_argument("insufficient margin: need at least the region diameter");
    Box2D shrunk{window.x0 + margin_x, window.x1 - margin_x, window.y0 + margin_y,
                 window.y1 - margin_y};
    if (!(shrunk.x0 < shrunk.x1) || !(shrunk.y0 < shrunk.y1))
        throw std::invalid_argument("window too small for the requested margin");

    Scalar need_lo = window.x0 - rx1, need_hi = window.x1 - rx0;
    std::vector<Fiber> fibers = lam.fibers_in(need_lo, need_hi);
    if (!lam.t_period()) {
        // The fiber list is trusted as explicit; it must at least reach far
        // enough to cover the shrunk window ends.
        if (fibers.empty() || shrunk.x0 - rx0 < fibers.front().t ||
            fibers.back().t < shrunk.x1 - rx1)
            throw std::invalid_argument(
                "fibers do not span the dilated window; list them all or declare t_period");
    }

    // Clipped translated rectangles.
    struct ClippedRect {
        Scalar x0, x1, y0, y1;
    };
    std::vector<ClippedRect> rects;
    std::vector<Scalar> xs{shrunk.x0, shrunk.x1};
    bool exact = shrunk.x0.exact() && shrunk.x1.exact() && shrunk.y0.exact() &&
                 shrunk.y1.exact();
    for (const Fiber& f : fibers) {
        for (const Scalar& y : f.freq.enumerate(window.y0 - ry1, window.y1 - ry0)) {
            for (const Rect& r : region.rects()) {
                Scalar cx0 = max(r.x.lo + f.t, window.x0), cx1 = min(r.x.hi + f.t, window.x1);
                Scalar cy0 = max(r.y.lo + y, window.y0), cy1 = min(r.y.hi + y, window.y1);
                if (cx0 < cx1 && cy0 < cy1) {
                    exact = exact && cx0.exact() && cx1.exact() && cy0.exact() &&
                            cy1.exact();
                    rects.push_back({cx0, cx1, cy0, cy1});
                    xs.push_back(cx0);
                    xs.push_back(cx1);
                }
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Verdict out;
    out.checked_window = {shrunk.x0, shrunk.x1, shrunk.y0, shrunk.y1};
    out.margin = {margin_x, margin_y};
    if (!exact) out.note = "floating mode: slabs narrower than 1e-12 of the window ignored";

    Scalar x_width = shrunk.x1 - shrunk.x0;
    bool all_one = true;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Scalar sx0 = max(xs[i], shrunk.x0), sx1 = min(xs[i + 1], shrunk.x1);
        if (!(sx0 < sx1)) continue;
        if (detail::negligible_slab(Interval{sx0, sx1}, x_width, exact)) continue;
        std::vector<detail::Event> events;
        for (const ClippedRect& r : rects) {
            if (r.x0 < sx1 && sx0 < r.x1 && !(sx0 < r.x0) && !(r.x1 < sx1)) {
                events.push_back({r.y0, +1});
                events.push_back({r.y1, -1});
            }
        }
        StepFunction col =
            detail::profile_from_events(std::move(events), window.y0, window.y1);
        Interval yr{shrunk.y0, shrunk.y1};
        Verdict v = detail::judge_profile(col, yr, require_tiling, exact, {}, {});
        if (v.witness) {
            out.status = v.status;
            out.witness = std::vector<Scalar>{(sx0 + sx1) / Scalar(2), (*v.witness)[0]};
            out.witness_coverage = v.witness_coverage;
            return out;
        }
        if (v.status != CoverageStatus::tiling) all_one = false;
    }
    out.status = all_one ? CoverageStatus::tiling : CoverageStatus::packing_strict;
    return out;
}

/// Coverage multiplicity of region + lam at one point (for spot checks).
inline int coverage_count_2d(const ProductRegion2D& region, const TranslationSet2D& lam,
                             const Scalar& x, const Scalar& y) {
    int count = 0;
    for (const Fiber& f : lam.fibers_in(x - region.x_hi(), x - region.x_lo())) {
        for (const Scalar& fy : f.freq.enumerate(y - region.y_hi(), y - region.y_lo())) {
            for (const Rect& r : region.rects()) {
                bool in_x = !(x < r.x.lo + f.t) && x < r.x.hi + f.t;
                bool in_y = !(y < r.y.lo + fy) && y < r.y.hi + fy;
                if (in_x && in_y) ++count;
            }
        }
    }
    return count;
}

}  // namespace gabortiles
