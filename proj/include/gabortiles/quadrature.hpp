#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace gabortiles {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre nodes/weights by Newton iteration on P_n. Exact for
/// polynomials of degree 2n-1.
inline QuadratureRule gauss_legendre(int n) {
    static std::map<int, QuadratureRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    cache[n] = rule;
    return rule;
}

/// Composite Gauss-Legendre over [a,b], fixed order per panel.
inline std::complex<double> integrate_panels(
    const std::function<std::complex<double>(double)>& f, double a, double b, int panels,
    int order = 8) {
    const QuadratureRule rule = gauss_legendre(order);
    std::complex<double> acc = 0.0;
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double c = lo + 0.5 * h, half = 0.5 * h;
        for (int i = 0; i < order; ++i)
            acc += rule.weights[i] * f(c + half * rule.nodes[i]);
    }
    return acc * (0.5 * h);
}

/// Panel count for integrating e^{-2 pi i nu x} over an interval of the given
/// length: at least `min_panels`, and at least 8 panels per oscillation.
inline int oscillation_panels(double length, double nu, int min_panels) {
    double periods = std::abs(nu) * length;
    int need = static_cast<int>(std::ceil(8.0 * periods));
    return std::max(min_panels, std::max(1, need));
}

}  // namespace gabortiles
