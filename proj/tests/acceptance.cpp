// Acceptance suite: one case per criterion, each printing a pass/fail line.

#include "catch2/catch_amalgamated.hpp"

#include "gabortiles/cli.hpp"
#include "gabortiles/gabortiles.hpp"
#include "gabortiles/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

using namespace gabortiles;

namespace {

IntervalUnion iu(std::initializer_list<std::pair<Rational, Rational>> parts) {
    std::vector<Interval> raw;
    for (const auto& [a, b] : parts) raw.push_back({Scalar(a), Scalar(b)});
    return IntervalUnion::normalize(raw);
}

struct Criterion {
    bool pass = true;
    std::string detail;

    void note(const std::string& s) { detail = s; }
    void also(bool ok) { pass = pass && ok; }
};

void report(int index, const char* name, const Criterion& c) {
    std::printf("[criterion %02d] %s: %s%s%s\n", index, name, c.pass ? "PASS" : "FAIL",
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("criterion 01: closed form vs quadrature oracle") {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ua(1e-3, 0.5), ub(1e-3, 3.0), unit(0.0, 1.0);
    Criterion c;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double a = ua(rng), b = ub(rng);
        WindowParams w(Scalar::from_double(a), Scalar::from_double(b));
        double t = (2.0 * unit(rng) - 1.0) * (b + 1.0);
        double nu = (2.0 * unit(rng) - 1.0) * 10.0;
        Complex closed = stft_auto(w, Scalar::from_double(t), Scalar::from_double(nu));
        Complex quad = stft_quadrature(w.set(), w.set(), Scalar::from_double(t),
                                       Scalar::from_double(nu), 128);
        worst = std::max(worst, std::abs(closed - quad));
    }
    double dt = seconds_since(t0);
    c.also(worst <= 1e-9);
    c.also(dt < 10.0);
    c.note("max |closed - quadrature| = " + format_double(worst) + ", " +
           format_double(dt) + " s");
    report(1, "closed form vs quadrature (1000 samples)", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 02: appendix figure soundness and completeness") {
    auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    struct Case {
        const char* alpha;
        const char* beta;
    };
    for (const Case& cs : {Case{"0.2581988897", "2"}, Case{"1/2", "2"}}) {
        CommandConfig cfg;
        cfg.subcommand = "zeros";
        cfg.alpha = cs.alpha;
        cfg.beta = cs.beta;
        cfg.tmax = 3.0;
        cfg.numax = 8.0;
        cfg.resolution = 200;
        cfg.format = "csv";
        std::ostringstream out, err;
        c.also(run(cfg, out, err) == 0);

        Scalar alpha = Scalar::parse(cs.alpha), beta = Scalar::parse(cs.beta);
        WindowParams w(alpha, beta);
        std::istringstream lines(out.str());
        std::string line;
        std::getline(lines, line);
        int rows = 0;
        double worst = 0.0;
        while (std::getline(lines, line)) {
            auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
            double t = std::stod(line.substr(0, c1));
            double nu = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
            worst = std::max(worst, std::abs(stft_auto(w, Scalar::from_double(t),
                                                       Scalar::from_double(nu))));
            ++rows;
        }
        c.also(rows > 500);
        c.also(worst < 1e-8);

        bool half = alpha.exact() ? alpha == Scalar(1, 2)
                                  : std::abs(alpha.value() - 0.5) < 1e-12;
        ZeroSetDescription zs =
            half ? zero_set_alpha_half(beta) : zero_set_alpha_lt_half(alpha, beta);
        const int n = 600;
        std::vector<double> far(static_cast<size_t>(n + 1), 0.0);
        parallel_for(n + 1, [&](long long i) {
            double t = 3.0 * static_cast<double>(i) / n;
            double worst_d = 0.0;
            for (int j = 0; j <= n; ++j) {
                double nu = 8.0 * j / n;
                if (std::abs(stft_auto(w, Scalar::from_double(t),
                                       Scalar::from_double(nu))) < 1e-6)
                    worst_d = std::max(worst_d,
                                       catalog_box_distance(zs, t, nu, 3.0, 8.0));
            }
            far[static_cast<size_t>(i)] = worst_d;
        });
        double worst_distance = *std::max_element(far.begin(), far.end());
        c.also(worst_distance <= 1e-3);
    }
    double dt = seconds_since(t0);
    c.also(dt < 60.0);
    c.note(format_double(dt) + " s");
    report(2, "appendix zero-set figures sound and complete (600x600)", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 03: packing-region tightness across all branches") {
    Criterion c;
    std::vector<std::pair<Scalar, Scalar>> windows;
    // alpha < 1/2 branch
    for (auto [p, q] : {std::pair{1, 3}, {1, 4}, {2, 5}, {3, 10}, {1, 6}, {5, 12}, {3, 7},
                        {4, 9}, {1, 5}, {7, 15}})
        for (int b : {1, 2}) windows.push_back({Scalar(p, q), Scalar(b)});
    // non-integer beta is allowed below one half as well
    for (auto [p, q] : {std::pair{1, 3}, {2, 7}, {3, 8}})
        windows.push_back({Scalar(p, q), Scalar(5, 3)});
    // alpha = 1/2, beta in (1/2)N
    for (int tb = 1; tb <= 12; ++tb) windows.push_back({Scalar(1, 2), Scalar(tb, 2)});
    // alpha = 1/2, beta not in (1/2)N, including 3/4
    for (auto [p, q] : {std::pair{3, 4}, {2, 3}, {5, 6}, {4, 5}, {7, 6}, {5, 4}, {8, 5},
                        {11, 6}, {7, 4}, {9, 5}, {13, 6}, {11, 4}, {23, 6}, {17, 5}, {13, 4}})
        windows.push_back({Scalar(1, 2), Scalar(p, q)});
    c.also(windows.size() >= 50);
    int branch_lt = 0, branch_block = 0, branch_filler = 0;
    for (const auto& [a, b] : windows) {
        PackingRegion pr = tight_packing_region(WindowParams(a, b));
        c.also(pr.tight);
        c.also(pr.region.measure() == Scalar(1));  // exact rational equality
        if (pr.regime == "alpha_lt_half") ++branch_lt;
        if (pr.regime == "alpha_half_block") ++branch_block;
        if (pr.regime == "alpha_half_filler") ++branch_filler;
    }
    c.also(branch_lt > 0 && branch_block > 0 && branch_filler > 0);
    c.note(std::to_string(windows.size()) + " windows, branches " +
           std::to_string(branch_lt) + "/" + std::to_string(branch_block) + "/" +
           std::to_string(branch_filler));
    report(3, "tight packing regions have exact measure 1", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 04: difference sets of the packing regions are zero-free") {
    Criterion c;
    std::vector<std::pair<Scalar, Scalar>> windows{{Scalar(3, 10), Scalar(1)},
                                                   {Scalar(3, 10), Scalar(1, 5)},
                                                   {Scalar(1, 2), Scalar(1)},
                                                   {Scalar(1, 2), Scalar(3, 2)}};
    std::string mins;
    for (const auto& [a, b] : windows) {
        WindowParams w(a, b);
        PackingRegionCheck chk =
            verify_packing_region(w, tight_packing_region(w), 10000, 1e-10);
        c.also(chk.spot_checks == 10000);
        c.also(chk.spot_passed);
        if (chk.catalog_available) c.also(chk.catalog_intersection_empty);
        c.also(chk.passed);
        mins += (mins.empty() ? "" : ", ") + format_double(chk.spot_min_abs);
    }
    c.note("min |V| over 10^4 samples: " + mins);
    report(4, "zero-free difference sets for the four window regimes", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 05: positive basis certification with randomized phases") {
    Criterion c;
    std::mt19937_64 rng(105);
    std::vector<Scalar> phases;
    for (int j = 0; j < 8; ++j)
        phases.push_back(Scalar(std::uniform_int_distribution<int>(0, 127)(rng), 128));
    GaborSystem sys{WindowParams(Scalar(3, 10), Scalar(1)),
                    standard_lattice_small_alpha(Scalar(1), phases)};
    Box2D box{Scalar(-4), Scalar(4), Scalar(-4), Scalar(4)};
    CertifyOptions opt;
    opt.frame_spot_checks = 25;
    opt.freq_trunc = 200;
    CertificationReport rep = certify_basis(sys, box, opt);
    c.also(rep.certified);
    c.also(rep.orthogonality.orthogonal);
    c.also(rep.tiling.is_tiling());
    double max_tail = 0.0;
    for (size_t i = 0; i < rep.frame_values.size(); ++i) {
        double tail = rep.frame_tails[i];
        max_tail = std::max(max_tail, tail);
        c.also(tail < 1e-2);
        c.also(rep.frame_values[i] >= 1.0 - tail - 1e-6);
        c.also(rep.frame_values[i] <= 1.0 + 1e-9 + tail);
    }
    c.also(rep.frame_values.size() == 25);
    c.note("25 frame sums in band, max tail " + format_double(max_tail));
    report(5, "randomized standard lattice certifies for (3/10, 1)", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 06: negative certification for the non-tile window") {
    Criterion c;
    WindowParams w(Scalar(3, 10), Scalar(3, 2));
    Classification cls = classify_two_interval_tile(w.alpha(), w.beta());
    c.also(!cls.tiles);
    Box2D box{Scalar(-4), Scalar(4), Scalar(-4), Scalar(4)};
    std::vector<TranslationSet2D> candidates;
    candidates.push_back(
        TranslationSet2D({{Scalar(0), TranslationSet1D::integers()}}, Scalar(1)));
    candidates.push_back(TranslationSet2D(
        {{Scalar(0), TranslationSet1D::lattice(Scalar(1, 2))}}, Scalar(1)));
    candidates.push_back(TranslationSet2D(
        {{Scalar(0), TranslationSet1D::integers()},
         {Scalar(5, 4), TranslationSet1D::lattice(Scalar(1), Scalar(1, 3))}},
        Scalar(5, 2)));
    candidates.push_back(TranslationSet2D(
        {{Scalar(0), TranslationSet1D::lattice(Scalar(2, 5))}}, Scalar(5, 2)));
    candidates.push_back(TranslationSet2D(
        {{Scalar(0), TranslationSet1D::integers()},
         {Scalar(1, 3), TranslationSet1D::lattice(Scalar(1), Scalar(1, 2))},
         {Scalar(2, 3), TranslationSet1D::integers()}},
        Scalar(1)));
    int failures = 0;
    for (const TranslationSet2D& lam : candidates) {
        CertificationReport rep = certify_basis({w, lam}, box);
        bool has_witness = !rep.orthogonality.orthogonal || rep.tiling.witness.has_value();
        if (!rep.certified && has_witness) ++failures;
    }
    c.also(failures == 5);
    c.note("all 5 candidate lattices fail with a witness");
    report(6, "no basis certifies for the non-tile (3/10, 3/2)", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 07: transposed standard form is refuted by the witness") {
    Criterion c;
    std::map<Scalar, std::vector<Scalar>> by_t;
    for (long long k = -5; k <= 5; ++k) {
        Scalar a = (k == 1) ? Scalar(1, 2) : Scalar(0);
        for (long long m = -7; m <= 7; ++m) by_t[Scalar(m) + a].push_back(Scalar(k));
    }
    std::vector<Fiber> fibers;
    for (auto& [t, ks] : by_t) fibers.push_back({t, TranslationSet1D(ks, {})});
    GaborSystem sys{WindowParams(Scalar(3, 10), Scalar(1)),
                    TranslationSet2D(std::move(fibers))};
    Box2D box{Scalar(-4), Scalar(4), Scalar(-4), Scalar(4)};
    OrthogonalityReport rep = check_orthogonality(sys, box, 1e-9, 8192);
    c.also(!rep.orthogonal);
    double witness_value = 0.0;
    for (const auto& [diff, val] : rep.violations)
        if (diff.t == Scalar(3, 2) && diff.nu == Scalar(1)) witness_value = val;
    c.also(witness_value > 0.01);
    c.note("|V(a_1 + beta, 1)| = " + format_double(witness_value));
    report(7, "witness difference (a_1 + beta, 1) violates orthogonality", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 08: half-case lattice certifies; parity counterexample rejected") {
    Criterion c;
    TranslationSet1D K = unite(unite(TranslationSet1D::lattice(Scalar(6)),
                                     TranslationSet1D::lattice(Scalar(6), Scalar(1))),
                               TranslationSet1D::lattice(Scalar(6), Scalar(2)));
    TranslationSet1D L = unite(TranslationSet1D::lattice(Scalar(6)),
                               TranslationSet1D::lattice(Scalar(6), Scalar(1)));
    std::vector<TranslationSet1D> Ls(6, L);
    std::vector<Scalar> phases{Scalar(0),    Scalar(1, 4), Scalar(1, 2),
                               Scalar(3, 4), Scalar(1, 8), Scalar(5, 8)};
    HalfCaseLattice built = standard_lattice_half_alpha(Scalar(1), K, 6, Ls, phases);
    c.also(built.time_condition.is_tiling());
    c.also(built.time_condition_half.is_tiling());
    Box2D box{Scalar(-4), Scalar(4), Scalar(-4), Scalar(4)};
    CertificationReport rep =
        certify_basis({WindowParams(Scalar(1, 2), Scalar(1)), built.lattice}, box);
    c.also(rep.certified);
    c.also(rep.regime == "alpha_half_block");

    bool rejected = false;
    std::string which;
    try {
        std::vector<TranslationSet1D> L2(
            2, unite(TranslationSet1D::lattice(Scalar(4)),
                     TranslationSet1D::lattice(Scalar(4), Scalar(1))));
        standard_lattice_half_alpha(Scalar(1, 2), TranslationSet1D::lattice(Scalar(2)), 2,
                                    L2, {Scalar(0), Scalar(0)});
    } catch (const ConditionViolation& e) {
        rejected = true;
        which = e.condition();
    }
    c.also(rejected && which == "iii");
    c.note("certified; K = 2Z rejected naming condition (iii)");
    report(8, "explicit (K, L_k, a_k) instance for (1/2, 1)", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 09: spectral pairs, duality, and the product form") {
    Criterion c;
    IntervalUnion unit = iu({{0, 1}});
    IntervalUnion omega = WindowParams(Scalar(3, 10), Scalar(1)).set();
    SpectralPairVerdict v1 = spectral_pair_check(unit, unit);
    SpectralPairVerdict v2 = spectral_pair_check(omega, unit);
    c.also(v1.is_spectral_pair && v1.tight);
    c.also(v2.is_spectral_pair && v2.tight);

    Interval win{Scalar(-6), Scalar(6)};
    SpectrumTilingCheck d1 =
        spectrum_tiling_check(unit, unit, v1, TranslationSet1D::integers(), win);
    c.also(d1.tiling_side.is_tiling() && d1.orthogonality_side && d1.agree);
    SpectrumTilingCheck d2 = spectrum_tiling_check(
        unit, unit, v1, TranslationSet1D::lattice(Scalar(2)), win);
    c.also(!d2.tiling_side.is_tiling() && d2.agree);
    SpectrumTilingCheck d3 =
        spectrum_tiling_check(omega, unit, v2, TranslationSet1D::integers(), win);
    c.also(d3.tiling_side.is_tiling() && d3.orthogonality_side && d3.agree);

    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> uw(-8.0, 8.0);
    double worst = 0.0;
    for (Rational beta : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        IntervalUnion blocks = half_case_frequency_factor(Scalar(beta));
        for (int i = 0; i < 1000; ++i) {
            Scalar om = Scalar::from_double(uw(rng));
            worst = std::max(worst, std::abs(block_set_ft_product_form(Scalar(beta), om) -
                                             std::abs(ft_indicator(blocks, om))));
        }
    }
    c.also(worst <= 1e-12);
    c.note("product-form deviation " + format_double(worst));
    report(9, "spectral pairs and spectrum-tiling duality", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 10: exact tiling kernel and exhaustive classification") {
    auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    {
        Verdict v = check_tiling_1d(WindowParams(Scalar(3, 10), Scalar(1)).set(),
                                    TranslationSet1D::integers(), {Scalar(-5), Scalar(5)},
                                    Scalar(2));
        c.also(v.is_tiling());
        c.also(v.note.empty());  // rational mode: no float slab filtering
    }
    {
        TranslationSet1D lam = unite(TranslationSet1D::lattice(Scalar(2)),
                                     TranslationSet1D::lattice(Scalar(2), Scalar(1, 2)));
        Verdict v = check_tiling_1d(WindowParams(Scalar(1, 2), Scalar(1, 2)).set(), lam,
                                    {Scalar(-5), Scalar(5)}, Scalar(3, 2));
        c.also(v.is_tiling());
    }
    // exhaustive sweep: denominators <= 6, beta <= 4
    std::vector<Rational> alphas;
    for (int q = 1; q <= 6; ++q)
        for (int p = 1; 2 * p <= q; ++p)
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) == 1)
                alphas.push_back(Rational(p, q));
    std::vector<Rational> betas;
    for (int q = 1; q <= 6; ++q)
        for (int p = 1; p <= 4 * q; ++p)
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) == 1)
                betas.push_back(Rational(p, q));
    int positives = 0, negatives = 0;
    for (const Rational& a : alphas) {
        for (const Rational& b : betas) {
            Classification cls = classify_two_interval_tile(Scalar(a), Scalar(b));
            IntervalUnion omega = WindowParams(Scalar(a), Scalar(b)).set();
            if (cls.tiles) {
                Scalar margin = omega.diameter();
                Scalar reach = margin + Scalar(10);
                Verdict v = check_tiling_1d(omega, *cls.tiling_set, {-reach, reach}, margin);
                c.also(v.is_tiling());
                ++positives;
            } else {
                c.also(!find_coset_tiling(omega, 4, 8).has_value());
                ++negatives;
            }
        }
    }
    double dt = seconds_since(t0);
    c.also(dt < 30.0);
    c.note(std::to_string(positives) + " tiles / " + std::to_string(negatives) +
           " non-tiles, " + format_double(dt) + " s");
    report(10, "exact sweeps agree with the classification", c);
    REQUIRE(c.pass);
}

TEST_CASE("criterion 11: isometry mass trend on growing frequency boxes") {
    Criterion c;
    IntervalUnion unit = iu({{0, 1}});
    std::vector<double> mass;
    for (double T : {10.0, 25.0, 50.0})
        mass.push_back(
            stft_pair_integral_box(unit, unit, unit, unit, -2, 2, -T, T, 16, 8).real());
    c.also(mass[0] < mass[1]);
    c.also(mass[1] < mass[2]);
    c.also(mass[2] >= 0.9);
    c.also(mass[2] <= 1.0);
    c.note("mass(10,25,50) = " + format_double(mass[0]) + ", " + format_double(mass[1]) +
           ", " + format_double(mass[2]));
    report(11, "stft energy approaches the product of norms", c);
    REQUIRE(c.pass);
}
