#pragma once

#include "gabortiles/scalar.hpp"
#include "gabortiles/zeroset.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace gabortiles {

/// CSV rows t,nu,component_id,component_kind with fixed 17-digit floats.
inline std::string zero_samples_to_csv(const std::vector<ZeroSamplePoint>& pts) {
    std::string out = "t,nu,component_id,component_kind\n";
    for (const ZeroSamplePoint& p : pts) {
        out += format_double(p.t);
        out += ',';
        out += format_double(p.nu);
        out += ',';
        out += p.component_id;
        out += ',';
        out += p.kind;
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8g", v);
    return buf;
}

}  // namespace detail

/// Standalone SVG: one <g> per component (dots for point families, small
/// circles along curves and strips), axes with ticks and an alpha/beta
/// legend. Deterministic output for fixed input.
inline std::string zero_samples_to_svg(const std::vector<ZeroSamplePoint>& pts,
                                       double alpha, double beta, double t_max,
                                       double nu_max) {
    const double W = 720, H = 540, ml = 60, mr = 20, mt = 40, mb = 50;
    const double pw = W - ml - mr, ph = H - mt - mb;
    auto X = [&](double t) { return ml + t / t_max * pw; };
    auto Y = [&](double nu) { return mt + (1.0 - nu / nu_max) * ph; };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                                    "#bcbd22", "#e377c2"};

    std::map<std::string, std::vector<const ZeroSamplePoint*>> groups;
    for (const ZeroSamplePoint& p : pts) groups[p.component_id].push_back(&p);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "  <rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    svg << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "    <line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\"/>\n";
    svg << "    <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\"/>\n";
    svg << "  </g>\n";
    svg << "  <g font-family=\"monospace\" font-size=\"11\" fill=\"black\">\n";
    for (int i = 0; i <= 6; ++i) {
        double t = t_max * i / 6.0, x = X(t);
        svg << "    <text x=\"" << detail::svg_num(x - 8) << "\" y=\"" << mt + ph + 16
            << "\">" << detail::svg_num(t) << "</text>\n";
    }
    for (int i = 0; i <= 8; ++i) {
        double nu = nu_max * i / 8.0, y = Y(nu);
        svg << "    <text x=\"" << detail::svg_num(ml - 36) << "\" y=\""
            << detail::svg_num(y + 4) << "\">" << detail::svg_num(nu) << "</text>\n";
    }
    svg << "    <text x=\"" << ml << "\" y=\"" << mt - 18 << "\">alpha="
        << detail::svg_num(alpha) << " beta=" << detail::svg_num(beta)
        << " (zero set, quadrant)</text>\n";
    svg << "    <text x=\"" << ml + pw - 20 << "\" y=\"" << mt + ph + 32 << "\">t</text>\n";
    svg << "    <text x=\"" << ml - 36 << "\" y=\"" << mt - 4 << "\">nu</text>\n";
    svg << "  </g>\n";

    int color = 0;
    for (const auto& [id, group] : groups) {
        const char* col = palette[color % 10];
        ++color;
        double r = group.front()->kind == std::string("discrete_points") ? 2.6 : 1.1;
        svg << "  <g fill=\"" << col << "\" data-component=\"" << id << "\">\n";
        for (const ZeroSamplePoint* p : group)
            svg << "    <circle cx=\"" << detail::svg_num(X(p->t)) << "\" cy=\""
                << detail::svg_num(Y(p->nu)) << "\" r=\"" << r << "\"/>\n";
        svg << "  </g>\n";
    }
    // legend
    svg << "  <g font-family=\"monospace\" font-size=\"10\">\n";
    color = 0;
    double ly = mt + 10;
    for (const auto& [id, group] : groups) {
        const char* col = palette[color % 10];
        ++color;
        svg << "    <rect x=\"" << ml + pw - 180 << "\" y=\"" << detail::svg_num(ly - 8)
            << "\" width=\"8\" height=\"8\" fill=\"" << col << "\"/>\n";
        svg << "    <text x=\"" << ml + pw - 168 << "\" y=\"" << detail::svg_num(ly)
            << "\">" << id << " (" << group.size() << ")</text>\n";
        ly += 13;
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace gabortiles
