#pragma once

#include "gabortiles/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gabortiles {

/// Arithmetic progression p*Z + o with p > 0.
struct Coset {
    Scalar period;
    Scalar offset;
};

/// Discrete subset of the line: finitely many points plus finitely many
/// cosets. Enumeration within any bounded window is exact and deduplicated
/// (set semantics: a point hit by two cosets counts once).
class TranslationSet1D {
public:
    TranslationSet1D() = default;
    TranslationSet1D(std::vector<Scalar> points, std::vector<Coset> cosets)
        : points_(std::move(points)), cosets_(std::move(cosets)) {
        for (const Coset& c : cosets_)
            if (!(Scalar(0) < c.period))
                throw std::invalid_argument("coset period must be positive");
    }

    static TranslationSet1D integers() { return TranslationSet1D({}, {{Scalar(1), Scalar(0)}}); }

    static TranslationSet1D lattice(Scalar period, Scalar offset = Scalar(0)) {
        return TranslationSet1D({}, {{std::move(period), std::move(offset)}});
    }

    const std::vector<Scalar>& points() const { return points_; }
    const std::vector<Coset>& cosets() const { return cosets_; }
    bool is_empty() const { return points_.empty() && cosets_.empty(); }

    /// All members in [lo, hi], sorted, duplicates removed. Enumeration
    /// indices are exact integers, so rational cosets yield rational members
    /// even when the window bounds are floating.
    std::vector<Scalar> enumerate(const Scalar& lo, const Scalar& hi) const {
        std::vector<Scalar> out;
        for (const Scalar& p : points_)
            if (!(p < lo) && !(hi < p)) out.push_back(p);
        for (const Coset& c : cosets_) {
            // smallest k with o + k p >= lo
            long long k0 =
                static_cast<long long>(std::floor(((lo - c.offset) / c.period).value()));
            Scalar x = c.offset + Scalar(k0) * c.period;
            while (x < lo) x += c.period;
            for (; !(hi < x); x += c.period) out.push_back(x);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool contains(const Scalar& x) const {
        for (const Scalar& p : points_)
            if (p == x) return true;
        for (const Coset& c : cosets_)
            if (((x - c.offset) / c.period).frac().is_zero()) return true;
        return false;
    }

    TranslationSet1D translated(const Scalar& shift) const {
        TranslationSet1D out = *this;
        for (Scalar& p : out.points_) p += shift;
        for (Coset& c : out.cosets_) c.offset += shift;
        return out;
    }

    TranslationSet1D scaled(const Scalar& factor) const {
        if (factor == Scalar(0)) throw std::invalid_argument("zero scale factor");
        TranslationSet1D out = *this;
        for (Scalar& p : out.points_) p *= factor;
        for (Coset& c : out.cosets_) {
            c.period *= factor;
            c.offset *= factor;
            if (c.period < Scalar(0)) c.period = -c.period;
        }
        return out;
    }

private:
    std::vector<Scalar> points_;
    std::vector<Coset> cosets_;
};

/// Union of two translation sets (set semantics).
inline TranslationSet1D unite(const TranslationSet1D& a, const TranslationSet1D& b) {
    std::vector<Scalar> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    std::vector<Coset> cs = a.cosets();
    cs.insert(cs.end(), b.cosets().begin(), b.cosets().end());
    return TranslationSet1D(std::move(pts), std::move(cs));
}

/// Time fiber of a planar translation set: all points {t} x freq.
struct Fiber {
    Scalar t;
    TranslationSet1D freq;
};

/// Planar translation set fibered over the time axis. An optional period P
/// declares that the listed fundamental fibers (with t in [0,P)) repeat as
/// t + P Z; without it the fiber list is taken as explicit and complete.
class TranslationSet2D {
public:
    TranslationSet2D() = default;
    explicit TranslationSet2D(std::vector<Fiber> fibers,
                              std::optional<Scalar> t_period = std::nullopt)
        : fibers_(std::move(fibers)), t_period_(std::move(t_period)) {
        if (t_period_ && !(Scalar(0) < *t_period_))
            throw std::invalid_argument("t_period must be positive");
        std::sort(fibers_.begin(), fibers_.end(),
                  [](const Fiber& a, const Fiber& b) { return a.t < b.t; });
        for (size_t i = 0; i + 1 < fibers_.size(); ++i)
            if (fibers_[i].t == fibers_[i + 1].t)
                throw std::invalid_argument("duplicate fiber t value");
        if (t_period_) {
            for (const Fiber& f : fibers_)
                if (f.t < Scalar(0) || !(f.t < *t_period_))
                    throw std::invalid_argument(
                        "periodic fibers must have t in [0, period)");
        }
    }

    const std::vector<Fiber>& fibers() const { return fibers_; }
    const std::optional<Scalar>& t_period() const { return t_period_; }

    /// Fibers whose t lies in [lo, hi]; periodic declarations are unrolled.
    std::vector<Fiber> fibers_in(const Scalar& lo, const Scalar& hi) const {
        std::vector<Fiber> out;
        if (!t_period_) {
            for (const Fiber& f : fibers_)
                if (!(f.t < lo) && !(hi < f.t)) out.push_back(f);
            return out;
        }
        const Scalar& period = *t_period_;
        long long k0 = static_cast<long long>(std::floor((lo / period).value())) - 1;
        for (long long k = k0;; ++k) {
            Scalar base = Scalar(k) * period;
            if (hi < base) break;
            for (const Fiber& f : fibers_) {
                Scalar t = base + f.t;
                if (!(t < lo) && !(hi < t)) out.push_back({t, f.freq});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Fiber& a, const Fiber& b) { return a.t < b.t; });
        return out;
    }

    /// All points in the closed box, fibers in t order, frequencies ascending.
    std::vector<std::pair<Scalar, Scalar>> enumerate(const Scalar& t_lo, const Scalar& t_hi,
                                                     const Scalar& nu_lo,
                                                     const Scalar& nu_hi) const {
        std::vector<std::pair<Scalar, Scalar>> out;
        for (const Fiber& f : fibers_in(t_lo, t_hi))
            for (const Scalar& y : f.freq.enumerate(nu_lo, nu_hi)) out.emplace_back(f.t, y);
        return out;
    }

private:
    std::vector<Fiber> fibers_;
    std::optional<Scalar> t_period_;
};

}  // namespace gabortiles
