#pragma once

#include "gabortiles/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gabortiles {

/// Half-open interval [lo, hi). Empty intervals (lo >= hi) are never stored
/// inside an IntervalUnion.
struct Interval {
    Scalar lo, hi;

    Scalar length() const { return hi - lo; }
    Scalar midpoint() const { return (lo + hi) / Scalar(2); }
};

/// Canonical finite union of half-open intervals: parts sorted by lo,
/// pairwise disjoint, adjacent parts merged, all endpoints in one number
/// mode. When the `open` flag is set the stored parts stand for their
/// interiors (a,b); open unions merge only on genuine overlap, never on
/// touching endpoints.
class IntervalUnion {
public:
    IntervalUnion() = default;

    static IntervalUnion normalize(std::vector<Interval> raw, bool allow_promote = false,
                                   bool open = false) {
        for (const Interval& iv : raw) {
            if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
        }
        bool any_float = false, any_rat = false;
        for (const Interval& iv : raw) {
            for (const Scalar* s : {&iv.lo, &iv.hi})
                (s->exact() ? any_rat : any_float) = true;
        }
        if (any_float && any_rat) {
            if (!allow_promote) throw std::invalid_argument("mode mismatch");
            for (Interval& iv : raw) {
                iv.lo = iv.lo.to_floating();
                iv.hi = iv.hi.to_floating();
            }
        }
        IntervalUnion u;
        u.open_ = open;
        u.mode_ = any_float ? NumberMode::floating : NumberMode::rational;
        std::erase_if(raw, [](const Interval& iv) { return !(iv.lo < iv.hi); });
        std::sort(raw.begin(), raw.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (Interval& iv : raw) {
            if (!u.parts_.empty()) {
                Interval& last = u.parts_.back();
                bool mergeable = open ? iv.lo < last.hi : !(last.hi < iv.lo);
                if (mergeable) {
                    last.hi = max(last.hi, iv.hi);
                    continue;
                }
            }
            u.parts_.push_back(std::move(iv));
        }
        return u;
    }

    static IntervalUnion empty(NumberMode mode = NumberMode::rational) {
        IntervalUnion u;
        u.mode_ = mode;
        return u;
    }

    static IntervalUnion single(Scalar lo, Scalar hi) {
        return normalize({Interval{std::move(lo), std::move(hi)}});
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    NumberMode mode() const { return mode_; }
    bool open() const { return open_; }

    Scalar measure() const {
        Scalar m = modal_zero();
        for (const Interval& iv : parts_) m += iv.length();
        return m;
    }

    Scalar lower_bound() const {
        if (is_empty()) throw std::logic_error("bounds of empty union");
        return parts_.front().lo;
    }
    Scalar upper_bound() const {
        if (is_empty()) throw std::logic_error("bounds of empty union");
        return parts_.back().hi;
    }
    Scalar diameter() const { return upper_bound() - lower_bound(); }

    /// Membership honours the open flag at endpoints.
    bool contains(const Scalar& x) const {
        for (const Interval& iv : parts_) {
            if (open_ ? (iv.lo < x && x < iv.hi) : (!(x < iv.lo) && x < iv.hi)) return true;
            if (iv.lo > x) break;
        }
        return false;
    }

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        if (a.parts_.size() != b.parts_.size()) return false;
        for (size_t i = 0; i < a.parts_.size(); ++i) {
            if (!(a.parts_[i].lo == b.parts_[i].lo && a.parts_[i].hi == b.parts_[i].hi))
                return false;
        }
        return true;
    }

private:
    Scalar modal_zero() const {
        return mode_ == NumberMode::floating ? Scalar::from_double(0.0) : Scalar(0);
    }

    std::vector<Interval> parts_;
    NumberMode mode_ = NumberMode::rational;
    bool open_ = false;
};

inline IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b,
                               bool allow_promote = false) {
    if (!a.is_empty() && !b.is_empty() && a.mode() != b.mode() && !allow_promote)
        throw std::invalid_argument("mode mismatch");
    std::vector<Interval> out;
    for (const Interval& p : a.parts()) {
        for (const Interval& q : b.parts()) {
            Scalar lo = max(p.lo, q.lo), hi = min(p.hi, q.hi);
            if (lo < hi) out.push_back({lo, hi});
        }
    }
    return IntervalUnion::normalize(std::move(out), true, a.open() && b.open());
}

inline IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b,
                           bool allow_promote = false) {
    std::vector<Interval> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return IntervalUnion::normalize(std::move(out), allow_promote, a.open() && b.open());
}

inline IntervalUnion translate(const IntervalUnion& a, const Scalar& t) {
    std::vector<Interval> out;
    out.reserve(a.parts().size());
    for (const Interval& p : a.parts()) out.push_back({p.lo + t, p.hi + t});
    return IntervalUnion::normalize(std::move(out), true, a.open());
}

inline IntervalUnion reflect(const IntervalUnion& a) {
    std::vector<Interval> out;
    out.reserve(a.parts().size());
    for (const Interval& p : a.parts()) out.push_back({-p.hi, -p.lo});
    return IntervalUnion::normalize(std::move(out), true, a.open());
}

inline Scalar measure(const IntervalUnion& a) { return a.measure(); }

/// The set {x - y : x, y in interior(A)}, returned as an open union.
inline IntervalUnion open_difference_set(const IntervalUnion& a) {
    if (a.is_empty()) throw std::invalid_argument("difference set of empty union");
    std::vector<Interval> out;
    for (const Interval& p : a.parts()) {
        for (const Interval& q : a.parts()) {
            // (p.lo,p.hi) - (q.lo,q.hi) = (p.lo - q.hi, p.hi - q.lo)
            out.push_back({p.lo - q.hi, p.hi - q.lo});
        }
    }
    return IntervalUnion::normalize(std::move(out), false, true);
}

/// One quadrant-reduced piece of an open symmetric set: (lo,hi), or [lo,hi)
/// when the original interval straddled 0 so that 0 itself is a member.
struct QuadrantSeg {
    Scalar lo, hi;
    bool lo_closed;

    bool contains(const Scalar& x) const {
        return (lo_closed ? !(x < lo) : lo < x) && x < hi;
    }
};

/// Reduces a symmetric open union to {|x| : x in S} as segments on [0,inf).
inline std::vector<QuadrantSeg> quadrant_reduce(const IntervalUnion& sym) {
    std::vector<QuadrantSeg> segs;
    Scalar zero = sym.mode() == NumberMode::floating ? Scalar::from_double(0.0) : Scalar(0);
    for (const Interval& p : sym.parts()) {
        if (!(zero < p.hi)) continue;
        bool straddles = p.lo < zero;
        segs.push_back({straddles ? zero : p.lo, p.hi, straddles});
    }
    return segs;
}

}  // namespace gabortiles
