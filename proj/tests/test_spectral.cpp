#include "catch2/catch_amalgamated.hpp"

#include "oracle_utils.hpp"

using namespace gabortiles;

namespace {

IntervalUnion iu(std::initializer_list<std::pair<Rational, Rational>> parts) {
    std::vector<Interval> raw;
    for (const auto& [a, b] : parts) raw.push_back({Scalar(a), Scalar(b)});
    return IntervalUnion::normalize(raw);
}

IntervalUnion to_float(const IntervalUnion& u) {
    std::vector<Interval> raw;
    for (const Interval& p : u.parts())
        raw.push_back({p.lo.to_floating(), p.hi.to_floating()});
    return IntervalUnion::normalize(raw);
}

WindowParams window(Rational a, Rational b) { return WindowParams(Scalar(a), Scalar(b)); }

}  // namespace

TEST_CASE("exact zero progressions", "[spectral]") {
    SECTION("single interval: the reciprocal-length lattice") {
        auto progs = exact_zero_progressions(iu({{0, 1}}));
        REQUIRE(progs.has_value());
        REQUIRE(progs->size() == 1);
        REQUIRE((*progs)[0].step == Scalar(1));
        REQUIRE((*progs)[0].contains(Scalar(3)));
        REQUIRE_FALSE((*progs)[0].contains(Scalar(1, 2)));
    }
    SECTION("two-interval window: every listed member is a closed-form zero") {
        IntervalUnion omega = window({3, 10}, 1).set();
        auto progs = exact_zero_progressions(omega);
        REQUIRE(progs.has_value());
        int members = 0;
        for (const Progression& pr : *progs) {
            for (int k = -20; k <= 20; ++k) {
                Scalar x = pr.offset + Scalar(k) * pr.step;
                if (x.is_zero() || Scalar(12) < x.abs()) continue;
                REQUIRE(std::abs(ft_indicator(omega, x)) < 1e-12);
                ++members;
            }
        }
        REQUIRE(members > 10);
    }
    SECTION("numeric scan agrees with the progressions on a window") {
        IntervalUnion omega = window({3, 10}, 1).set();
        auto progs = exact_zero_progressions(omega);
        auto numeric = numeric_zeros(omega, 0.05, 4.5);
        for (double z : numeric) {
            bool matched = false;
            for (const Progression& pr : *progs) {
                Scalar q = (Scalar::from_double(z) - pr.offset) / pr.step;
                matched = matched || std::abs(q.value() - std::round(q.value())) < 1e-7;
            }
            REQUIRE(matched);
        }
        // the integer frequencies 1..4 are all zeros for integral beta
        REQUIRE(numeric.size() >= 4);
    }
}

TEST_CASE("spectral pair verdicts", "[spectral]") {
    SECTION("unit cube pair is tight spectral") {
        SpectralPairVerdict v = spectral_pair_check(iu({{0, 1}}), iu({{0, 1}}));
        REQUIRE(v.is_spectral_pair);
        REQUIRE(v.tight);
        REQUIRE(v.exact);
    }
    SECTION("window against the unit interval is tight spectral") {
        SpectralPairVerdict v = spectral_pair_check(window({3, 10}, 1).set(), iu({{0, 1}}));
        REQUIRE(v.is_spectral_pair);
        REQUIRE(v.tight);
    }
    SECTION("window against a length-two interval fails on the half lattice") {
        IntervalUnion two = iu({{0, 2}});
        SpectralPairVerdict v = spectral_pair_check(window({3, 10}, 1).set(), two);
        REQUIRE_FALSE(v.is_spectral_pair);
        REQUIRE(v.witness_diff_a.has_value());
        // the witness is a genuine half-integer zero of the long interval's
        // transform, and 1/2 itself lies in the open difference set
        REQUIRE(std::abs(ft_indicator(two, *v.witness_diff_a)) < 1e-12);
        REQUIRE((*v.witness_diff_a * Scalar(2)).is_integral());
        REQUIRE_FALSE(v.witness_diff_a->is_integral());
        REQUIRE(std::abs(ft_indicator(two, Scalar(1, 2))) < 1e-15);
        REQUIRE(open_difference_set(window({3, 10}, 1).set()).contains(Scalar(1, 2)));
    }
    SECTION("floating inputs take the scan route and agree") {
        SpectralPairVerdict good =
            spectral_pair_check(to_float(window({3, 10}, 1).set()), to_float(iu({{0, 1}})));
        REQUIRE(good.is_spectral_pair);
        REQUIRE(good.tight);
        REQUIRE_FALSE(good.exact);
        SpectralPairVerdict bad =
            spectral_pair_check(to_float(window({3, 10}, 1).set()), to_float(iu({{0, 2}})));
        REQUIRE_FALSE(bad.is_spectral_pair);
        double w = bad.witness_diff_a->value();
        REQUIRE(std::abs(w * 2.0 - std::round(w * 2.0)) < 1e-6);
    }
    SECTION("empty inputs are rejected") {
        REQUIRE_THROWS_AS(spectral_pair_check(IntervalUnion::empty(), iu({{0, 1}})),
                          std::invalid_argument);
    }
}

TEST_CASE("spectral pair products", "[spectral]") {
    SpectralPair unit{iu({{0, 1}}), iu({{0, 1}}),
                      spectral_pair_check(iu({{0, 1}}), iu({{0, 1}}))};
    SpectralPair windowed{window({3, 10}, 1).set(), iu({{0, 1}}),
                          spectral_pair_check(window({3, 10}, 1).set(), iu({{0, 1}}))};
    SECTION("window x unit cube stays tight") {
        SpectralPair2D prod = spectral_pair_product(windowed, unit);
        REQUIRE(prod.tight);
        REQUIRE(prod.a.measure() == Scalar(1));
        REQUIRE(prod.b.measure() == Scalar(1));
    }
    SECTION("cube x cube is the planar cube pair") {
        SpectralPair2D prod = spectral_pair_product(unit, unit);
        REQUIRE(prod.tight);
        REQUIRE(prod.a.rects().size() == 1);
    }
    SECTION("unverified inputs are rejected") {
        SpectralPair broken{window({3, 10}, 1).set(), iu({{0, 2}}),
                            spectral_pair_check(window({3, 10}, 1).set(), iu({{0, 2}}))};
        REQUIRE_THROWS_AS(spectral_pair_product(broken, unit), std::invalid_argument);
    }
}

TEST_CASE("spectrum-tiling duality", "[spectral]") {
    Interval win{Scalar(-6), Scalar(6)};
    SECTION("unit pair with the integers: both sides hold") {
        auto verdict = spectral_pair_check(iu({{0, 1}}), iu({{0, 1}}));
        SpectrumTilingCheck c = spectrum_tiling_check(
            iu({{0, 1}}), iu({{0, 1}}), verdict, TranslationSet1D::integers(), win);
        REQUIRE(c.tiling_side.is_tiling());
        REQUIRE(c.orthogonality_side);
        REQUIRE(c.is_spectrum);
        REQUIRE(c.agree);
    }
    SECTION("window pair with the integers: both sides hold") {
        IntervalUnion omega = window({3, 10}, 1).set();
        auto verdict = spectral_pair_check(omega, iu({{0, 1}}));
        SpectrumTilingCheck c = spectrum_tiling_check(omega, iu({{0, 1}}), verdict,
                                                      TranslationSet1D::integers(), win);
        REQUIRE(c.tiling_side.is_tiling());
        REQUIRE(c.orthogonality_side);
        REQUIRE(c.agree);
    }
    SECTION("sparse lattice: tiling side records the failure") {
        auto verdict = spectral_pair_check(iu({{0, 1}}), iu({{0, 1}}));
        SpectrumTilingCheck c = spectrum_tiling_check(
            iu({{0, 1}}), iu({{0, 1}}), verdict, TranslationSet1D::lattice(Scalar(2)), win);
        REQUIRE_FALSE(c.tiling_side.is_tiling());
        REQUIRE(c.orthogonality_side);  // exponentials at even integers stay orthogonal
        REQUIRE_FALSE(c.is_spectrum);
        REQUIRE(c.agree);
    }
    SECTION("a non-tight pair is rejected") {
        auto verdict = spectral_pair_check(iu({{0, 2}}), iu({{0, 1}}));
        REQUIRE_THROWS_AS(spectrum_tiling_check(iu({{0, 2}}), iu({{0, 1}}), verdict,
                                                TranslationSet1D::integers(), win),
                          std::invalid_argument);
    }
}

TEST_CASE("block-set transform product form", "[spectral]") {
    SECTION("value one at the origin") {
        REQUIRE(block_set_ft_product_form(Scalar(1), Scalar(0)) ==
                Catch::Approx(1.0).margin(1e-14));
    }
    SECTION("matches the direct transform at beta = 1, omega = 1/4") {
        IntervalUnion b = half_case_frequency_factor(Scalar(1));
        double direct = std::abs(ft_indicator(b, Scalar(1, 4)));
        REQUIRE(block_set_ft_product_form(Scalar(1), Scalar(1, 4)) ==
                Catch::Approx(direct).margin(1e-12));
    }
    SECTION("cancellation point omega = beta + 1/2 stays finite and nonzero") {
        for (Rational beta : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
            Scalar omega = Scalar(beta) + Scalar(1, 2);
            double v = block_set_ft_product_form(Scalar(beta), omega);
            REQUIRE(std::isfinite(v));
            REQUIRE(v == Catch::Approx(2.0 / kPi).margin(1e-9));
            IntervalUnion b = half_case_frequency_factor(Scalar(beta));
            REQUIRE(v == Catch::Approx(std::abs(ft_indicator(b, omega))).margin(1e-9));
        }
    }
    SECTION("random sweep across the half-integer betas") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> uw(-6.0, 6.0);
        for (Rational beta : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
            IntervalUnion b = half_case_frequency_factor(Scalar(beta));
            for (int rep = 0; rep < 250; ++rep) {
                Scalar omega = Scalar::from_double(uw(rng));
                double direct = std::abs(ft_indicator(b, omega));
                REQUIRE(block_set_ft_product_form(Scalar(beta), omega) ==
                        Catch::Approx(direct).margin(1e-12));
            }
        }
    }
    SECTION("regime guard") {
        REQUIRE_THROWS_AS(block_set_ft_product_form(Scalar(2, 3), Scalar(1)),
                          std::invalid_argument);
    }
}
