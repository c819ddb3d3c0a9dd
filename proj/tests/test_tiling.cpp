#include "catch2/catch_amalgamated.hpp"

#include "oracle_utils.hpp"

using namespace gabortiles;
using testutil::brute_coverage;
using testutil::random_rational;

namespace {

IntervalUnion iu(std::initializer_list<std::pair<Rational, Rational>> parts) {
    std::vector<Interval> raw;
    for (const auto& [a, b] : parts) raw.push_back({Scalar(a), Scalar(b)});
    return IntervalUnion::normalize(raw);
}

WindowParams window(Rational a, Rational b) { return WindowParams(Scalar(a), Scalar(b)); }

}  // namespace

TEST_CASE("coverage profiles", "[tiling]") {
    SECTION("unit tiling by the integers") {
        auto prof = coverage_profile_1d(iu({{0, 1}}), TranslationSet1D::integers(),
                                        {Scalar(-3), Scalar(3)});
        for (const auto& [slab, count] : prof) REQUIRE(count == 1);
    }
    SECTION("two-interval window tiles by the integers") {
        auto prof = coverage_profile_1d(window({3, 10}, 1).set(), TranslationSet1D::integers(),
                                        {Scalar(-5), Scalar(5)});
        for (const auto& [slab, count] : prof) {
            if (slab.hi < Scalar(-3) || Scalar(3) < slab.lo) continue;  // boundary effects
            REQUIRE(count == 1);
        }
    }
    SECTION("intro half-case set: 2Z u (2Z + 1/2)") {
        TranslationSet1D lam = unite(TranslationSet1D::lattice(Scalar(2)),
                                     TranslationSet1D::lattice(Scalar(2), Scalar(1, 2)));
        auto prof = coverage_profile_1d(window({1, 2}, {1, 2}).set(), lam,
                                        {Scalar(-4), Scalar(4)});
        for (const auto& [slab, count] : prof) {
            if (slab.hi < Scalar(-2) || Scalar(2) < slab.lo) continue;
            REQUIRE(count == 1);
        }
    }
    SECTION("profile agrees with point-count oracle on random probes") {
        std::mt19937_64 rng(31);
        for (int rep = 0; rep < 40; ++rep) {
            IntervalUnion a = testutil::random_union(rng, 2, 6, 0, 2);
            if (a.is_empty()) continue;
            TranslationSet1D lam({Scalar(random_rational(rng, 4, -1, 1))},
                                 {{Scalar(random_rational(rng, 3, 1, 2)).abs() + Scalar(1, 3),
                                   Scalar(random_rational(rng, 4, 0, 1))}});
            Interval win{Scalar(-4), Scalar(4)};
            auto prof = coverage_profile_1d(a, lam, win);
            for (int probe = 0; probe < 20; ++probe) {
                Scalar x(random_rational(rng, 23, -3, 3));
                int expected = brute_coverage(a, lam, x);
                for (const auto& [slab, count] : prof)
                    if (!(x < slab.lo) && x < slab.hi) REQUIRE(count == expected);
            }
        }
    }
    SECTION("permuted translation input gives the identical profile") {
        IntervalUnion a = window({3, 10}, 1).set();
        TranslationSet1D fwd({Scalar(2), Scalar(-1)}, {{Scalar(1), Scalar(0)}});
        TranslationSet1D rev({Scalar(-1), Scalar(2)}, {{Scalar(1), Scalar(0)}});
        Interval win{Scalar(-3), Scalar(3)};
        auto p1 = coverage_profile_1d(a, fwd, win), p2 = coverage_profile_1d(a, rev, win);
        REQUIRE(p1.size() == p2.size());
        for (size_t i = 0; i < p1.size(); ++i) {
            REQUIRE(p1[i].first.lo == p2[i].first.lo);
            REQUIRE(p1[i].second == p2[i].second);
        }
    }
}

TEST_CASE("packing and tiling verdicts", "[tiling]") {
    Interval win{Scalar(-5), Scalar(5)};
    SECTION("non-tile overlaps") {
        IntervalUnion omega = window({3, 10}, {3, 2}).set();
        Verdict v = check_tiling_1d(omega, TranslationSet1D::integers(), win, Scalar(3));
        REQUIRE(v.status == CoverageStatus::overlap);
        REQUIRE(v.witness.has_value());
        REQUIRE(v.witness_coverage ==
                brute_coverage(omega, TranslationSet1D::integers(), (*v.witness)[0]));
    }
    SECTION("sparse lattice gaps") {
        Verdict v = check_tiling_1d(window({3, 10}, 1).set(),
                                    TranslationSet1D::lattice(Scalar(2)), win, Scalar(2));
        REQUIRE(v.status == CoverageStatus::gap);
        REQUIRE(v.witness_coverage == 0);
    }
    SECTION("integer tiling certifies") {
        Verdict v = check_tiling_1d(window({3, 10}, 1).set(), TranslationSet1D::integers(),
                                    win, Scalar(2));
        REQUIRE(v.is_tiling());
        REQUIRE_FALSE(v.witness.has_value());
    }
    SECTION("packing check tolerates gaps but not overlaps") {
        Verdict v = check_packing_1d(window({3, 10}, 1).set(),
                                     TranslationSet1D::lattice(Scalar(2)), win, Scalar(2));
        REQUIRE(v.status == CoverageStatus::packing_strict);
        REQUIRE(v.passes_packing());
    }
    SECTION("insufficient margin is an error") {
        REQUIRE_THROWS_WITH(check_tiling_1d(window({3, 10}, 1).set(),
                                            TranslationSet1D::integers(), win, Scalar(1)),
                            Catch::Matchers::ContainsSubstring("insufficient margin"));
    }
}

TEST_CASE("planar sweep", "[tiling]") {
    Box2D box{Scalar(-4), Scalar(4), Scalar(-4), Scalar(4)};
    TranslationSet2D zz({{Scalar(0), TranslationSet1D::integers()}}, Scalar(1));
    SECTION("product region tiles by Z x Z") {
        ProductRegion2D d(window({3, 10}, 1).set(), iu({{0, 1}}));
        Verdict v = check_tiling_2d(d, zz, box, Scalar(2), Scalar(1));
        REQUIRE(v.is_tiling());
    }
    SECTION("stretched frequency lattice leaves gaps") {
        ProductRegion2D d(window({3, 10}, 1).set(), iu({{0, 1}}));
        TranslationSet2D lam({{Scalar(0), TranslationSet1D::lattice(Scalar(3, 2))}},
                             Scalar(1));
        Verdict v = check_tiling_2d(d, lam, box, Scalar(2), Scalar(1));
        REQUIRE(v.status == CoverageStatus::gap);
        REQUIRE(v.witness.has_value());
        REQUIRE(coverage_count_2d(d, lam, (*v.witness)[0], (*v.witness)[1]) ==
                v.witness_coverage);
    }
    SECTION("half-case block region with a fibered lattice") {
        // blocks for beta = 1 with K = {0,1,2} + 6Z, L_k = 6Z u (6Z+1)
        ProductRegion2D d(window({1, 2}, 1).set(),
                          iu({{0, {1, 3}}, {{2, 3}, 1}, {{4, 3}, {5, 3}}}));
        TranslationSet1D lk = unite(TranslationSet1D::lattice(Scalar(2)),
                                    TranslationSet1D::lattice(Scalar(2), Scalar(1, 3)));
        std::vector<Fiber> fibers;
        for (int k : {0, 1, 2}) fibers.push_back({Scalar(k, 2), lk});
        TranslationSet2D lam(std::move(fibers), Scalar(3));
        Verdict v = check_tiling_2d(d, lam, box, Scalar(2), Scalar(5, 3));
        REQUIRE(v.is_tiling());
    }
    SECTION("explicit fiber lists must span the window") {
        ProductRegion2D d(window({3, 10}, 1).set(), iu({{0, 1}}));
        TranslationSet2D lam({{Scalar(0), TranslationSet1D::integers()}});
        REQUIRE_THROWS_WITH(check_tiling_2d(d, lam, box, Scalar(2), Scalar(1)),
                            Catch::Matchers::ContainsSubstring("fibers"));
    }
    SECTION("density sanity: translate count times area covers the window") {
        ProductRegion2D d(window({3, 10}, 1).set(), iu({{0, 1}}));
        Verdict v = check_tiling_2d(d, zz, box, Scalar(2), Scalar(1));
        REQUIRE(v.is_tiling());
        double win_area = 4.0 * 6.0;  // shrunk window [-2,2] x [-3,3]
        double region = d.measure().value();
        int contributing = 0;
        for (const Fiber& f : zz.fibers_in(Scalar(-4), Scalar(2)))
            contributing += static_cast<int>(f.freq.enumerate(Scalar(-4), Scalar(3)).size());
        REQUIRE(static_cast<double>(contributing) * region >= win_area - 1e-9);
    }
}

TEST_CASE("two-interval classification", "[tiling]") {
    SECTION("integer beta below half tiles by Z") {
        Classification c = classify_two_interval_tile(Scalar(3, 10), Scalar(1));
        REQUIRE(c.tiles);
        REQUIRE(c.spectral);
        REQUIRE(c.tiling_set.has_value());
        Verdict v = check_tiling_1d(window({3, 10}, 1).set(), *c.tiling_set,
                                    {Scalar(-5), Scalar(5)}, Scalar(2));
        REQUIRE(v.is_tiling());
    }
    SECTION("non-integral beta below half does not tile") {
        Classification c = classify_two_interval_tile(Scalar(3, 10), Scalar(3, 2));
        REQUIRE_FALSE(c.tiles);
        REQUIRE_FALSE(c.tiling_set.has_value());
    }
    SECTION("half case beta = 1/2 uses the shifted lattice") {
        Classification c = classify_two_interval_tile(Scalar(1, 2), Scalar(1, 2));
        REQUIRE(c.tiles);
        REQUIRE(c.tiling_set->cosets().size() == 2);
        Verdict v = check_tiling_1d(window({1, 2}, {1, 2}).set(), *c.tiling_set,
                                    {Scalar(-5), Scalar(5)}, Scalar(2));
        REQUIRE(v.is_tiling());
    }
    SECTION("regime and mode guards") {
        REQUIRE_THROWS_WITH(classify_two_interval_tile(Scalar(3, 4), Scalar(1)),
                            Catch::Matchers::ContainsSubstring("normalized regime"));
        REQUIRE_THROWS_WITH(classify_two_interval_tile(Scalar::from_double(0.3), Scalar(1)),
                            Catch::Matchers::ContainsSubstring("tolerance"));
        Classification c = classify_two_interval_tile(Scalar::from_double(0.3),
                                                      Scalar::from_double(1.0), 1e-9);
        REQUIRE(c.tiles);
        REQUIRE(c.tolerance_mode);
    }
}

TEST_CASE("bounded coset tiling search", "[tiling]") {
    SECTION("finds the integer tiling") {
        auto found = find_coset_tiling(window({3, 10}, 1).set());
        REQUIRE(found.has_value());
        Verdict v = check_tiling_1d(window({3, 10}, 1).set(), *found, {Scalar(-6), Scalar(6)},
                                    Scalar(2));
        REQUIRE(v.is_tiling());
    }
    SECTION("finds the half-shift tiling") {
        auto found = find_coset_tiling(window({1, 2}, {1, 2}).set());
        REQUIRE(found.has_value());
        Verdict v = check_tiling_1d(window({1, 2}, {1, 2}).set(), *found,
                                    {Scalar(-6), Scalar(6)}, Scalar(2));
        REQUIRE(v.is_tiling());
    }
    SECTION("reports nothing for non-tiles") {
        REQUIRE_FALSE(find_coset_tiling(window({3, 10}, {3, 2}).set()).has_value());
        REQUIRE_FALSE(find_coset_tiling(window({1, 4}, {1, 2}).set()).has_value());
    }
}

TEST_CASE("unit-mass tiling equivalence", "[tiling]") {
    SECTION("identical inputs trivially agree") {
        auto conv = [](double, double) { return 1.0; };
        TilingEquivalence r =
            unit_mass_tiling_equivalence(conv, conv, -1, 1, -1, 1, 8, 8, 1e-9);
        REQUIRE(r.f_tiles);
        REQUIRE(r.g_tiles);
        REQUIRE(r.agree);
    }
    SECTION("frame sum vs indicator coverage, tiling and non-tiling lattices") {
        WindowParams w = window({3, 10}, 1);
        ProductRegion2D d(w.set(), iu({{0, 1}}));
        TranslationSet2D lam({{Scalar(0), TranslationSet1D::integers()}}, Scalar(1));
        auto conv_f = [&](double x, double y) {
            FrameSum fs =
                frame_sum(w, lam, {Scalar::from_double(x), Scalar::from_double(y)}, 400);
            return fs.value + fs.tail_bound;  // upper end of the certified interval
        };
        auto conv_g = [&](double x, double y) {
            return static_cast<double>(
                coverage_count_2d(d, lam, Scalar::from_double(x), Scalar::from_double(y)));
        };
        TilingEquivalence r = unit_mass_tiling_equivalence(conv_f, conv_g, -0.9, 0.9, -0.9,
                                                           0.9, 7, 7, 6e-3);
        REQUIRE(r.f_tiles);
        REQUIRE(r.g_tiles);
        REQUIRE(r.agree);

        TranslationSet2D sparse({{Scalar(0), TranslationSet1D::lattice(Scalar(2))}},
                                Scalar(1));
        auto conv_f2 = [&](double x, double y) {
            FrameSum fs =
                frame_sum(w, sparse, {Scalar::from_double(x), Scalar::from_double(y)}, 400);
            return fs.value + fs.tail_bound;
        };
        auto conv_g2 = [&](double x, double y) {
            return static_cast<double>(
                coverage_count_2d(d, sparse, Scalar::from_double(x), Scalar::from_double(y)));
        };
        TilingEquivalence r2 = unit_mass_tiling_equivalence(conv_f2, conv_g2, -0.9, 0.9,
                                                            -0.9, 0.9, 7, 7, 6e-3);
        REQUIRE_FALSE(r2.f_tiles);
        REQUIRE_FALSE(r2.g_tiles);
        REQUIRE(r2.agree);
    }
}

TEST_CASE("fubini consistency for fibered tilings", "[tiling]") {
    // half-case instance: each fiber's frequency set tiles against the
    // blocks, and the induced time multiset tiles against the window
    IntervalUnion blocks = iu({{0, {1, 3}}, {{2, 3}, 1}, {{4, 3}, {5, 3}}});
    TranslationSet1D lk = unite(TranslationSet1D::lattice(Scalar(2)),
                                TranslationSet1D::lattice(Scalar(2), Scalar(1, 3)));
    Verdict vf = check_tiling_1d(blocks, lk, {Scalar(-6), Scalar(6)}, Scalar(5, 3));
    REQUIRE(vf.is_tiling());
    TranslationSet1D times({}, {{Scalar(3), Scalar(0)},
                                {Scalar(3), Scalar(1, 2)},
                                {Scalar(3), Scalar(1)}});
    Verdict vt = check_tiling_1d(window({1, 2}, 1).set(), times, {Scalar(-8), Scalar(8)},
                                 Scalar(2));
    REQUIRE(vt.is_tiling());
}
