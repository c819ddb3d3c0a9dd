#pragma once

#include "gabortiles/jsonio.hpp"
#include "gabortiles/zeroset_io.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace gabortiles {

/// Parsed command line for one invocation. Rational strings stay exact;
/// decimal strings downgrade to floating mode (classification then requires
/// the tolerance and says so on stderr).
struct CommandConfig {
    std::string subcommand;  // classify | zeros | certify | framesum | tile-check | pack-region
    std::string alpha, beta;
    std::string lambda_path;
    std::string set_path;
    std::string omega;  // "t,nu"
    std::vector<std::string> window;  // x0 x1 [y0 y1]
    double tmax = 3.0, numax = 8.0;
    int resolution = 200;
    int trunc = 200;
    double tol = 1e-9;
    std::string format = "json";  // json | csv | svg
    std::string out_path;         // empty = stdout
};

namespace cli_detail {

inline void emit(const CommandConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write file: " + cfg.out_path);
    f << payload;
}

inline Box2D parse_box(const std::vector<std::string>& window, int def) {
    if (window.empty()) return {Scalar(-def), Scalar(def), Scalar(-def), Scalar(def)};
    if (window.size() != 4)
        throw std::invalid_argument("window needs four bounds: x0 x1 y0 y1");
    return {Scalar::parse(window[0]), Scalar::parse(window[1]), Scalar::parse(window[2]),
            Scalar::parse(window[3])};
}

inline std::pair<Scalar, Scalar> parse_omega(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("omega needs the form t,nu");
    return {Scalar::parse(s.substr(0, comma)), Scalar::parse(s.substr(comma + 1))};
}

}  // namespace cli_detail

/// Executes one subcommand. Exit status: 0 success/pass, 2 mathematical
/// failure (with witness in the output), 1 usage error.
inline int run(const CommandConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    try {
        if (cfg.subcommand == "classify") {
            Scalar alpha = Scalar::parse(cfg.alpha), beta = Scalar::parse(cfg.beta);
            bool exact = alpha.exact() && beta.exact();
            if (!exact)
                err << "warning: floating input, classification downgraded to tolerance "
                       "mode (tol "
                    << cfg.tol << ")\n";
            Classification c = classify_two_interval_tile(
                alpha, beta, exact ? std::nullopt : std::optional<double>(cfg.tol));
            Json j = classification_to_json(c);
            j["alpha"] = scalar_to_json(alpha);
            j["beta"] = scalar_to_json(beta);
            cli_detail::emit(cfg, dump_deterministic(j) + "\n", out);
            return 0;
        }

        if (cfg.subcommand == "zeros") {
            Scalar alpha = Scalar::parse(cfg.alpha), beta = Scalar::parse(cfg.beta);
            bool half = alpha.exact() ? alpha == Scalar(1, 2)
                                      : std::abs(alpha.value() - 0.5) < 1e-12;
            ZeroSetDescription zs =
                half ? zero_set_alpha_half(beta) : zero_set_alpha_lt_half(alpha, beta);
            auto pts = sample(zs, Scalar::from_double(cfg.tmax),
                              Scalar::from_double(cfg.numax), cfg.resolution);
            if (cfg.format == "csv") {
                cli_detail::emit(cfg, zero_samples_to_csv(pts), out);
            } else if (cfg.format == "svg") {
                cli_detail::emit(cfg,
                                 zero_samples_to_svg(pts, alpha.value(), beta.value(),
                                                     cfg.tmax, cfg.numax),
                                 out);
            } else {
                Json arr = Json::array();
                for (const ZeroSamplePoint& p : pts)
                    arr.push_back(Json{{"t", p.t},
                                       {"nu", p.nu},
                                       {"component_id", p.component_id},
                                       {"component_kind", p.kind}});
                Json j{{"alpha", scalar_to_json(alpha)},
                       {"beta", scalar_to_json(beta)},
                       {"points", arr}};
                for (const std::string& n : zs.notes) j["notes"].push_back(n);
                cli_detail::emit(cfg, dump_deterministic(j) + "\n", out);
            }
            return 0;
        }

        if (cfg.subcommand == "certify") {
            Scalar alpha = Scalar::parse(cfg.alpha), beta = Scalar::parse(cfg.beta);
            GaborSystem sys{WindowParams(alpha, beta),
                            translation_set_2d_from_json(load_json_file(cfg.lambda_path))};
            Box2D box = cli_detail::parse_box(cfg.window, 4);
            CertifyOptions opt;
            opt.tol = cfg.tol;
            opt.frame_spot_checks = 5;
            opt.freq_trunc = cfg.trunc;
            CertificationReport rep = certify_basis(sys, box, opt);
            cli_detail::emit(cfg, dump_deterministic(certification_report_to_json(rep)) + "\n",
                             out);
            return rep.certified ? 0 : 2;
        }

        if (cfg.subcommand == "framesum") {
            Scalar alpha = Scalar::parse(cfg.alpha), beta = Scalar::parse(cfg.beta);
            WindowParams w(alpha, beta);
            TranslationSet2D lam =
                translation_set_2d_from_json(load_json_file(cfg.lambda_path));
            auto [ot, onu] = cli_detail::parse_omega(cfg.omega);
            FrameSum fs = frame_sum(w, lam, {ot, onu}, cfg.trunc);
            Json j{{"value", fs.value},
                   {"tail_bound", fs.tail_bound},
                   {"omega", Json::array({scalar_to_json(ot), scalar_to_json(onu)})},
                   {"trunc", cfg.trunc}};
            cli_detail::emit(cfg, dump_deterministic(j) + "\n", out);
            return 0;
        }

        if (cfg.subcommand == "tile-check") {
            Json set_json = load_json_file(cfg.set_path);
            Json lam_json = load_json_file(cfg.lambda_path);
            Verdict v;
            if (set_json.contains("time_factor")) {
                ProductRegion2D region(
                    interval_union_from_json(set_json.at("time_factor")),
                    interval_union_from_json(set_json.at("freq_factor")));
                TranslationSet2D lam = translation_set_2d_from_json(lam_json);
                Box2D box = cli_detail::parse_box(cfg.window, 4);
                v = check_tiling_2d(region, lam, box,
                                    region.x_hi() - region.x_lo(),
                                    region.y_hi() - region.y_lo(), true);
            } else {
                IntervalUnion a = interval_union_from_json(set_json);
                TranslationSet1D lam = translation_set_1d_from_json(lam_json);
                Box2D box = cli_detail::parse_box(cfg.window, 5);
                v = check_tiling_1d(a, lam, Interval{box.x0, box.x1}, a.diameter());
            }
            cli_detail::emit(cfg, dump_deterministic(verdict_to_json(v)) + "\n", out);
            return v.is_tiling() ? 0 : 2;
        }

        if (cfg.subcommand == "pack-region") {
            Scalar alpha = Scalar::parse(cfg.alpha), beta = Scalar::parse(cfg.beta);
            PackingRegion pr = tight_packing_region(WindowParams(alpha, beta));
            cli_detail::emit(cfg, dump_deterministic(packing_region_to_json(pr)) + "\n", out);
            return 0;
        }

        err << "unknown subcommand: " << cfg.subcommand << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gabortiles
