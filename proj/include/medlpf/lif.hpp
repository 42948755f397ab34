#pragma once

#include <cmath>
#include <span>

#include "medlpf/base.hpp"
#include "medlpf/compensated.hpp"
#include "medlpf/constants.hpp"
#include "medlpf/quadrature.hpp"

namespace medlpf {

// Quadrature cost grows linearly with x; beyond this use the expansion.
inline constexpr double kLifQuadratureCap = 1.0e8;
inline constexpr int kDefaultLifExpansionOrder = 4;

enum class LifMode { quadrature, expansion };

struct LifValue {
    double x = 0.0;
    double value = 0.0;
    LifMode mode = LifMode::quadrature;
    int expansion_order = 0;       // k when mode == expansion
    double error_estimate = 0.0;
};

// li_f(x) = int_2^x {x/t}/log t dt, evaluated after the substitution
// u = x/t as x * int_1^{x/2} {u} / (u^2 log(x/u)) du. The integrand has
// kinks exactly at the integers, so each unit interval [k, k+1] (and the
// final partial piece up to x/2) gets its own fixed-order Gauss-Legendre
// rule, restoring spectral accuracy per piece.
inline double lif_quadrature_value(double x, int gl_order = 8) {
    require(x >= 4.0, "li_f: x must be >= 4");
    require(x <= kLifQuadratureCap, "li_f: x above quadrature cap, use expansion mode");
    const GaussLegendre rule = make_gauss_legendre(gl_order);
    const double logx = std::log(x);
    const double half = x / 2.0;
    const u64 kmax = static_cast<u64>(std::floor(half));

    CompensatedSum acc;
    for (u64 k = 1; k < kmax; ++k) {
        const double kd = static_cast<double>(k);
        double piece = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            const double u = kd + 0.5 * (rule.node[i] + 1.0);
            piece += rule.weight[i] * (u - kd) / (u * u * (logx - std::log(u)));
        }
        acc.add(0.5 * piece);
    }
    // partial piece [kmax, x/2]
    const double a = static_cast<double>(kmax);
    if (half > a) {
        const double h = 0.5 * (half - a);
        const double c = 0.5 * (half + a);
        double piece = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            const double u = c + h * rule.node[i];
            piece += rule.weight[i] * (u - a) / (u * u * (logx - std::log(u)));
        }
        acc.add(h * piece);
    }
    return x * acc.value();
}

// Truncated series sum_{n<k} n! c_n x / log^{n+1} x against supplied
// coefficients c_0..c_{k-1} (and c_k for the error estimate when present).
inline double lif_expansion_value(double x, int k, std::span<const double> c) {
    require(x >= 100.0, "lif_expansion: x must be >= 100");
    require(k >= 1 && k <= 6, "lif_expansion: k out of range (1..6)");
    require(static_cast<int>(c.size()) >= k, "lif_expansion: not enough coefficients");
    const double logx = std::log(x);
    double nfact = 1.0;
    double pw = x / logx;
    double s = 0.0;
    for (int n = 0; n < k; ++n) {
        if (n >= 1) nfact *= n;
        s += nfact * c[static_cast<size_t>(n)] * pw;
        pw /= logx;
    }
    return s;
}

inline LifValue li_f(double x, LifMode mode, int k = kDefaultLifExpansionOrder,
                     int gl_order = 8) {
    LifValue v;
    v.x = x;
    v.mode = mode;
    if (mode == LifMode::quadrature) {
        v.value = lif_quadrature_value(x, gl_order);
        // measured per-order truncation: ~1e-11 relative at order 8,
        // machine-level from order 16 up
        v.error_estimate = std::abs(v.value) * (gl_order >= 16 ? 1e-13 : 5e-11);
        return v;
    }
    const auto& c = default_c();
    v.value = lif_expansion_value(x, k, c);
    v.expansion_order = k;
    // first omitted term
    const double logx = std::log(x);
    v.error_estimate = detail::factorial(k) * std::abs(c[static_cast<size_t>(k)]) * x
                       / std::pow(logx, k + 1);
    return v;
}

// Source selection used by the predictors: quadrature below the cap,
// expansion(4) above, so li_f stays defined for all x.
inline double li_f_auto(double x) {
    if (x <= kLifQuadratureCap)
        return lif_quadrature_value(x);
    return lif_expansion_value(x, kDefaultLifExpansionOrder, default_c());
}

} // namespace medlpf
