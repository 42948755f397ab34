#pragma once

#include <cmath>
#include <vector>

#include "medlpf/base.hpp"
#include "medlpf/constants.hpp"
#include "medlpf/lif.hpp"

namespace medlpf {

enum class SeriesKind { lif, omega_sum, big_omega_sum };

// Truncated expansion in powers of 1/log x.
//  - lif: coefficients[n] = n! c_n, value = sum coefficients[n] x/log^{n+1} x
//  - omega_sum / big_omega_sum: coefficients[0] holds the Mertens constant
//    (B1 resp. B2) and coefficients[n>=1] = (n-1)! c_{n-1};
//    value = x log log x + coefficients[0] x - sum_{n>=1} coefficients[n] x/log^n x
struct AsymptoticSeries {
    SeriesKind kind = SeriesKind::lif;
    std::vector<double> coefficients;
    int truncation_order = 0;
};

inline AsymptoticSeries lif_series(int k) {
    require(k >= 1 && k <= 6, "lif_series: k out of range (1..6)");
    AsymptoticSeries s;
    s.kind = SeriesKind::lif;
    s.truncation_order = k;
    const auto& c = default_c();
    double nfact = 1.0;
    for (int n = 0; n < k; ++n) {
        if (n >= 1) nfact *= n;
        s.coefficients.push_back(nfact * c[static_cast<size_t>(n)]);
    }
    return s;
}

namespace detail {

inline AsymptoticSeries omega_like_series(SeriesKind kind, int k, double mertens_const) {
    AsymptoticSeries s = lif_series(k);
    s.kind = kind;
    s.truncation_order = k;
    s.coefficients.insert(s.coefficients.begin(), mertens_const);
    return s;
}

} // namespace detail

inline AsymptoticSeries omega_sum_series(int k) {
    return detail::omega_like_series(SeriesKind::omega_sum, k, default_B1());
}

inline AsymptoticSeries big_omega_sum_series(int k) {
    return detail::omega_like_series(SeriesKind::big_omega_sum, k, default_B2());
}

inline double evaluate(const AsymptoticSeries& s, double x) {
    require(x >= 100.0, "evaluate: x must be >= 100");
    const double logx = std::log(x);
    if (s.kind == SeriesKind::lif) {
        double pw = x / logx, v = 0.0;
        for (double a : s.coefficients) {
            v += a * pw;
            pw /= logx;
        }
        return v;
    }
    double pw = x / logx, tail = 0.0;
    for (size_t n = 1; n < s.coefficients.size(); ++n) {
        tail += s.coefficients[n] * pw;
        pw /= logx;
    }
    return x * std::log(logx) + s.coefficients[0] * x - tail;
}

// Prop-1.2-style truncation of li_f.
inline double lif_expansion(double x, int k) {
    return evaluate(lif_series(k), x);
}

// Diaconis-type expansion of sum_{n<=x} omega(n):
//   x log log x + B1 x - (c_0 x/log x + ... + (k-1)! c_{k-1} x/log^k x).
inline double omega_sum_expansion(double x, int k) {
    return evaluate(omega_sum_series(k), x);
}

// The li_f-exact variant x log log x + B1 x - li_f(x).
inline double omega_sum_model(double x) {
    require(x >= 100.0, "omega_sum_model: x must be >= 100");
    return x * std::log(std::log(x)) + default_B1() * x - li_f_auto(x);
}

inline double big_omega_sum_expansion(double x, int k) {
    return evaluate(big_omega_sum_series(k), x);
}

// x log log x + B2 x - li_f(x).
inline double big_omega_sum_model(double x) {
    require(x >= 100.0, "big_omega_sum_model: x must be >= 100");
    return x * std::log(std::log(x)) + default_B2() * x - li_f_auto(x);
}

// Median predictors. The precise exponent (1/sqrt(e)) exp(-li_f(x)/x)
// tends to 1/sqrt(e) from below; the leading form pins the constant
// e^{(gamma-1)/sqrt(e)} in front of x^{1/sqrt(e)}.
struct MedianPrediction {
    double x = 0.0;
    double predictor_lif = 0.0;
    double predictor_leading = 0.0;
    double exponent = 0.0;
};

inline double inv_sqrt_e() { return std::exp(-0.5); }

inline MedianPrediction median_predictor_lif(double x) {
    require(x >= 10.0, "median_predictor_lif: x must be >= 10");
    MedianPrediction p;
    p.x = x;
    p.exponent = inv_sqrt_e() * std::exp(-li_f_auto(x) / x);
    p.predictor_lif = std::pow(x, p.exponent);
    p.predictor_leading = median_leading_constant() * std::pow(x, inv_sqrt_e());
    return p;
}

// Empirical fit of the first correction coefficient in
// M(x) ~ e^{(gamma-1)/sqrt(e)} x^{1/sqrt(e)} (1 + d_1/log x + ...),
// from one exact median: d_1 ~ (r(x) - 1) log x. Diagnostic output only;
// nothing in the suite asserts its value.
inline double fit_d1_empirical(double x, double median_exact) {
    require(x >= 100.0, "fit_d1_empirical: x must be >= 100");
    const double r = median_exact / (median_leading_constant() * std::pow(x, inv_sqrt_e()));
    return (r - 1.0) * std::log(x);
}

} // namespace medlpf
