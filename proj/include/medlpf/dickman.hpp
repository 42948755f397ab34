#pragma once

#include <cmath>
#include <vector>

#include "medlpf/base.hpp"
#include "medlpf/constants.hpp"
#include "medlpf/lif.hpp"

namespace medlpf {

inline constexpr double kRhoUMax = 10.0;
inline constexpr int kRhoStepsPerUnit = 4096;
inline constexpr double kSaiasEpsilon = 0.05;

// Dickman-de Bruijn rho on [0, u_max]. Closed form up to u = 2
// (1 on [0,1], 1 - log u on [1,2]); beyond that the delay equation is
// marched on a fixed mesh through its integral form
//   rho(u) = (1/u) int_{u-1}^{u} rho(t) dt,
// trapezoid per step with a sliding prefix-sum window. The integral
// form avoids differentiating across the mesh joins that the
// rho'(u) = -rho(u-1)/u form would hit.
class RhoTable {
public:
    explicit RhoTable(double u_max = kRhoUMax, int steps_per_unit = kRhoStepsPerUnit)
        : u_max_(u_max), steps_(steps_per_unit) {
        require(u_max >= 2.0, "RhoTable: u_max must be >= 2");
        require(steps_per_unit >= 16, "RhoTable: mesh too coarse");
        const int K = steps_;
        const double h = 1.0 / K;
        const size_t n = static_cast<size_t>(std::llround(u_max * K));
        values_.resize(n + 1);
        std::vector<double> prefix(n + 1);

        for (int j = 0; j <= K; ++j) values_[static_cast<size_t>(j)] = 1.0;
        for (size_t j = K + 1; j <= static_cast<size_t>(2 * K) && j <= n; ++j)
            values_[j] = 1.0 - std::log(static_cast<double>(j) * h);

        prefix[0] = values_[0];
        const size_t filled = std::min<size_t>(n, static_cast<size_t>(2 * K));
        for (size_t j = 1; j <= filled; ++j) prefix[j] = prefix[j - 1] + values_[j];

        for (size_t j = filled + 1; j <= n; ++j) {
            const double uj = static_cast<double>(j) * h;
            // trapezoid over [u_j - 1, u_j]: h*(sum_{i=j-K}^{j} f_i - f_{j-K}/2 - f_j/2),
            // solved for the implicit f_j term
            const double window = prefix[j - 1] - prefix[j - K - 1] - 0.5 * values_[j - K];
            const double v = (h / uj) * window / (1.0 - h / (2.0 * uj));
            values_[j] = v;
            prefix[j] = prefix[j - 1] + v;
        }
    }

    double u_max() const { return u_max_; }
    double mesh() const { return 1.0 / steps_; }

    double value(double u) const {
        require(u >= 0.0, "rho: u must be >= 0");
        require(u <= u_max_, "rho: u beyond table range");
        if (u <= 1.0) return 1.0;
        if (u <= 2.0) return 1.0 - std::log(u);
        const double t = u * steps_;
        const size_t j = std::min(static_cast<size_t>(t), values_.size() - 2);
        const double frac = t - static_cast<double>(j);
        return values_[j] + frac * (values_[j + 1] - values_[j]);
    }

private:
    double u_max_;
    int steps_;
    std::vector<double> values_;
};

// rho(u) against a shared default-resolution table.
inline double rho(double u) {
    static const RhoTable table;
    return table.value(u);
}

enum class LambdaMethod { closed_form, saias };

// De Bruijn's smooth-count approximation, valid for sqrt(x) < y <= x
// (1 <= u < 2 in u = log x / log y).
struct LambdaValue {
    double x = 0.0;
    double y = 0.0;
    double u = 0.0;
    double value = 0.0;
    LambdaMethod method = LambdaMethod::closed_form;
    int saias_terms = 0;
};

// Lambda(x, y) = x (1 - log(log x / log y)) + li_f(x) for y > sqrt(x).
inline LambdaValue lambda_closed_form(double x, double y) {
    require(x >= 4.0, "lambda_closed_form: x must be >= 4");
    require(y * y > x, "lambda_closed_form: y must exceed sqrt(x)");
    require(y <= x, "lambda_closed_form: y must be <= x");
    LambdaValue v;
    v.x = x;
    v.y = y;
    v.u = std::log(x) / std::log(y);
    v.value = x * (1.0 - std::log(v.u)) + li_f_auto(x);
    v.method = LambdaMethod::closed_form;
    return v;
}

// Saias expansion on 1 < u < 2, where rho(u) = 1 - log u and the
// derivative ladder rho^(k)(u) = (k-1)!(-1)^k/u^k folds the a_k
// coefficients into x rho(u) + sum_{k=1}^{n} (k-1)! c_{k-1} x / log^k x.
inline LambdaValue lambda_saias(double x, double y, int n) {
    require(x >= 100.0, "lambda_saias: x must be >= 100");
    require(y * y > x, "lambda_saias: y must exceed sqrt(x)");
    require(y < x, "lambda_saias: y must be < x");
    require(n >= 0 && n <= 4, "lambda_saias: n out of range (0..4)");
    const double u = std::log(x) / std::log(y);
    const double dist = std::abs(u - std::round(u));
    require(dist >= kSaiasEpsilon, "lambda_saias: u too close to an integer");

    LambdaValue v;
    v.x = x;
    v.y = y;
    v.u = u;
    v.method = LambdaMethod::saias;
    v.saias_terms = n;
    v.value = x * rho(u);
    if (n >= 1)
        v.value += lif_expansion_value(x, n, default_c());
    return v;
}

// Solve Lambda(x, y) = x/2 for y by bisection on log y over
// (log x / 2, log x). Returns the real solution, not rounded to a prime;
// comparison against the sieve median is by relative error.
inline double median_via_lambda(double x) {
    require(x >= 1000.0, "median_via_lambda: x must be >= 1e3");
    const double logx = std::log(x);
    const double lif = li_f_auto(x);
    auto residual = [&](double t) {
        return x * (1.0 - std::log(logx / t)) + lif - 0.5 * x;
    };
    double lo = 0.5 * logx, hi = logx;
    require(residual(lo) < 0.0 && residual(hi) > 0.0,
            "median_via_lambda: no sign change on (sqrt(x), x)");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * logx) break;
    }
    return std::exp(0.5 * (lo + hi));
}

} // namespace medlpf
