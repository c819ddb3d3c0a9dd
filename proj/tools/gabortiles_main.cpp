#include "gabortiles/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Gabor systems with two-interval windows: classification, zero sets, "
                 "tiling checks and basis certification"};
    app.require_subcommand(1);

    gabortiles::CommandConfig cfg;

    auto add_window_opts = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "window alpha, rational like 3/10 or decimal")
            ->required();
        sub->add_option("--beta", cfg.beta, "window beta, rational like 1 or decimal")
            ->required();
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("-o,--out", cfg.out_path, "output path (default: stdout)");
    };

    CLI::App* classify = app.add_subcommand("classify", "tiling/spectrality classification");
    add_window_opts(classify);
    classify->add_option("--tol", cfg.tol, "tolerance for floating inputs");
    add_out(classify);

    CLI::App* zeros = app.add_subcommand("zeros", "emit zero-set figure data");
    add_window_opts(zeros);
    zeros->add_option("--tmax", cfg.tmax, "time bound of the emitted box");
    zeros->add_option("--numax", cfg.numax, "frequency bound of the emitted box");
    zeros->add_option("--resolution", cfg.resolution, "points per continuous component");
    zeros->add_option("--format", cfg.format, "json | csv | svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    add_out(zeros);

    CLI::App* certify = app.add_subcommand("certify", "certify a Gabor orthonormal basis");
    add_window_opts(certify);
    certify->add_option("--lambda", cfg.lambda_path, "translation-set JSON file")->required();
    certify->add_option("--window", cfg.window, "check box: x0 x1 y0 y1")->expected(4);
    certify->add_option("--tol", cfg.tol, "orthogonality tolerance");
    certify->add_option("--trunc", cfg.trunc, "frame-sum frequency truncation");
    add_out(certify);

    CLI::App* framesum = app.add_subcommand("framesum", "frame sum at one point");
    add_window_opts(framesum);
    framesum->add_option("--lambda", cfg.lambda_path, "translation-set JSON file")
        ->required();
    framesum->add_option("--omega", cfg.omega, "evaluation point t,nu")->required();
    framesum->add_option("--trunc", cfg.trunc, "frequency truncation indices");
    add_out(framesum);

    CLI::App* tile = app.add_subcommand("tile-check", "1-D or 2-D tiling verdict");
    tile->add_option("--set", cfg.set_path, "region JSON file")->required();
    tile->add_option("--lambda", cfg.lambda_path, "translation-set JSON file")->required();
    tile->add_option("--window", cfg.window, "check box (x0 x1 for 1-D, x0 x1 y0 y1)")
        ->expected(4);
    add_out(tile);

    CLI::App* pack = app.add_subcommand("pack-region", "emit the tight packing region");
    add_window_opts(pack);
    add_out(pack);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    return gabortiles::run(cfg);
}
