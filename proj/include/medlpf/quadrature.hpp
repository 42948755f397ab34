#pragma once

#include <cmath>
#include <vector>

#include "medlpf/base.hpp"

namespace medlpf {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    int order = 0;
    std::vector<double> node;
    std::vector<double> weight;
};

// Nodes and weights by Newton iteration on the Legendre recurrence
// (the classic gauleg construction). Cheap enough to build per call.
inline GaussLegendre make_gauss_legendre(int order) {
    require(order >= 1 && order <= 64, "make_gauss_legendre: order out of range");
    GaussLegendre g;
    g.order = order;
    g.node.resize(order);
    g.weight.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            deriv = order * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / deriv;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        g.node[i] = -z;
        g.node[order - 1 - i] = z;
        g.weight[i] = g.weight[order - 1 - i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
    }
    return g;
}

// Integrate f over [a, b] with a fixed rule.
template <typename F>
double gl_integrate(F&& f, double a, double b, const GaussLegendre& g) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < g.order; ++i)
        s += g.weight[i] * f(c + h * g.node[i]);
    return h * s;
}

} // namespace medlpf
