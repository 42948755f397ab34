#pragma once

#include <cmath>
#include <vector>

#include "medlpf/base.hpp"
#include "medlpf/compensated.hpp"
#include "medlpf/quadrature.hpp"
#include "medlpf/sieve.hpp"
#include "medlpf/stieltjes.hpp"

namespace medlpf {

struct ConstantValue {
    double value = 0.0;
    double claimed_error = 0.0;
};

enum class CoeffMethod { integral, stieltjes };

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace detail

// c_n = 1 - sum_{k<=n} gamma_k / k!, from the computed Stieltjes constants.
inline std::vector<ConstantValue> coeff_c_stieltjes_all(int n_max,
                                                        u64 m_cutoff = kDefaultStieltjesCutoff) {
    const auto g = stieltjes_all(n_max, m_cutoff);
    std::vector<ConstantValue> out(n_max + 1);
    double partial = 0.0, err = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const double kfact = detail::factorial(n);
        partial += g[n].value / kfact;
        err += g[n].claimed_error / kfact;
        out[n].value = 1.0 - partial;
        out[n].claimed_error = err + 2e-16;
    }
    return out;
}

// c_n = (1/n!) int_1^inf {u} u^-2 (log u)^n du, by unit-interval
// Gauss-Legendre on [1, U] plus the analytic half tail
//   int_U^inf (1/2) u^-2 (log u)^n du = (n!/2) e^-L sum_{j<=n} L^j/j!,  L = log U.
// The oscillating remainder ({u} - 1/2 against a decreasing envelope) is
// bounded by (log U)^n / (8 U^2); U is doubled until that is below 1e-10
// after the 1/n! normalization.
inline std::vector<ConstantValue> coeff_c_integral_all(int n_max, int gl_order = 12) {
    require(n_max >= 0 && n_max <= kMaxStieltjesIndex, "coeff_c: n out of range (0..8)");
    const double nfact_max = detail::factorial(n_max);
    u64 U = u64{1} << 16;
    auto tail_bound = [&](u64 cutoff) {
        const double L = std::log(static_cast<double>(cutoff));
        return std::pow(L, n_max) / (8.0 * static_cast<double>(cutoff) * static_cast<double>(cutoff) * nfact_max);
    };
    while (tail_bound(U) > 1e-10) U <<= 1;

    const GaussLegendre rule = make_gauss_legendre(gl_order);
    std::vector<CompensatedSum> acc(n_max + 1);
    for (u64 k = 1; k < U; ++k) {
        const double kd = static_cast<double>(k);
        for (int i = 0; i < rule.order; ++i) {
            const double u = kd + 0.5 * (rule.node[i] + 1.0);
            const double w = 0.5 * rule.weight[i];
            const double f = w * (u - kd) / (u * u);
            const double lu = std::log(u);
            double term = f;
            acc[0].add(term);
            for (int n = 1; n <= n_max; ++n) {
                term *= lu;
                acc[n].add(term);
            }
        }
    }

    const double L = std::log(static_cast<double>(U));
    const double eL = 1.0 / static_cast<double>(U);  // e^{-log U}
    // per-interval rule truncation, measured: ~1e-11 below order 12,
    // machine-level from order 12 up
    const double rule_truncation = (gl_order >= 12) ? 1e-13 : 1e-11;
    std::vector<ConstantValue> out(n_max + 1);
    double lj_sum = 0.0, lj = 1.0;  // running sum_{j<=n} L^j / j!
    double Ln = 1.0;
    for (int n = 0; n <= n_max; ++n) {
        const double nfact = detail::factorial(n);
        lj_sum += lj;
        out[n].value = acc[n].value() / nfact + 0.5 * eL * lj_sum;
        out[n].claimed_error = Ln / (8.0 * static_cast<double>(U) * static_cast<double>(U) * nfact)
                               + rule_truncation;
        lj *= L / (n + 1);
        Ln *= L;
    }
    return out;
}

// Expansion coefficient c_n by either route.
inline ConstantValue coeff_c(int n, CoeffMethod method) {
    require(n >= 0 && n <= kMaxStieltjesIndex, "coeff_c: n out of range (0..8)");
    if (method == CoeffMethod::stieltjes)
        return coeff_c_stieltjes_all(n)[static_cast<size_t>(n)];
    return coeff_c_integral_all(n)[static_cast<size_t>(n)];
}

inline const std::vector<StieltjesValue>& default_stieltjes() {
    static const std::vector<StieltjesValue> v = stieltjes_all(kMaxStieltjesIndex);
    return v;
}

namespace detail {

struct MertensTails {
    double prime_power_sum = 0.0;  // sum_p (-log(1-1/p) - 1/p) over p <= cutoff
    double p_pm1_sum = 0.0;        // sum_p 1/(p(p-1)) over p <= cutoff
};

inline MertensTails mertens_tail_sums(u64 prime_cutoff, u64 segment_size) {
    CompensatedSum a, b;
    for_primes(2, prime_cutoff, segment_size, [&](u64 p) {
        const double pd = static_cast<double>(p);
        const double ip = 1.0 / pd;
        a.add(-std::log1p(-ip) - ip);
        b.add(1.0 / (pd * (pd - 1.0)));
    });
    return {a.value(), b.value()};
}

} // namespace detail

// B1 = gamma - sum_p sum_{k>=2} 1/(k p^k); the inner sum is
// -log(1 - 1/p) - 1/p in closed form. Tail over p > cutoff is below
// sum_{n>cutoff} 1/n^2 < 1/cutoff; small cutoffs are accepted and just
// report the correspondingly large claimed error.
inline ConstantValue mertens_constant_B1(u64 prime_cutoff,
                                         u64 segment_size = kDefaultSegmentSize) {
    require(prime_cutoff >= 2, "mertens_constant_B1: cutoff must be >= 2");
    const StieltjesValue& gamma = default_stieltjes()[0];
    const auto sums = detail::mertens_tail_sums(prime_cutoff, segment_size);
    ConstantValue out;
    out.value = gamma.value - sums.prime_power_sum;
    out.claimed_error = gamma.claimed_error + 1.0 / static_cast<double>(prime_cutoff);
    return out;
}

// B2 = B1 + sum_p 1/(p(p-1)), same cutoff and tail bound shape.
inline ConstantValue constant_B2(u64 prime_cutoff,
                                 u64 segment_size = kDefaultSegmentSize) {
    require(prime_cutoff >= 2, "constant_B2: cutoff must be >= 2");
    const StieltjesValue& gamma = default_stieltjes()[0];
    const auto sums = detail::mertens_tail_sums(prime_cutoff, segment_size);
    ConstantValue out;
    out.value = gamma.value - sums.prime_power_sum + sums.p_pm1_sum;
    out.claimed_error = gamma.claimed_error + 2.0 / static_cast<double>(prime_cutoff);
    return out;
}

// ---- cached defaults shared by the predictor/expansion layers ----

inline const std::vector<double>& default_c() {
    static const std::vector<double> c = [] {
        const auto v = coeff_c_stieltjes_all(kMaxStieltjesIndex);
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& e : v) out.push_back(e.value);
        return out;
    }();
    return c;
}

inline double default_B1() {
    static const double b = mertens_constant_B1(1'000'000).value;
    return b;
}

inline double default_B2() {
    static const double b = constant_B2(1'000'000).value;
    return b;
}

// e^{(gamma - 1)/sqrt(e)}, the leading median constant.
inline double median_leading_constant() {
    static const double v = std::exp((default_stieltjes()[0].value - 1.0) * std::exp(-0.5));
    return v;
}

// High-precision constant bundle with provenance, as surfaced by the CLI.
struct ConstantSet {
    std::vector<StieltjesValue> gamma;
    std::vector<ConstantValue> c_stieltjes;
    std::vector<ConstantValue> c_integral;
    ConstantValue B1;
    ConstantValue B2;
    double median_leading = 0.0;
    u64 prime_cutoff = 0;
    u64 gamma_cutoff = 0;

    // Largest |c_integral - c_stieltjes| over the table.
    double lemma_gap() const {
        double g = 0.0;
        for (size_t n = 0; n < c_stieltjes.size(); ++n)
            g = std::max(g, std::abs(c_integral[n].value - c_stieltjes[n].value));
        return g;
    }
};

inline ConstantSet compute_constant_set(int n_max, u64 prime_cutoff,
                                        u64 gamma_cutoff = kDefaultStieltjesCutoff) {
    ConstantSet cs;
    cs.gamma = stieltjes_all(n_max, gamma_cutoff);
    cs.c_stieltjes = coeff_c_stieltjes_all(n_max, gamma_cutoff);
    cs.c_integral = coeff_c_integral_all(n_max);
    cs.B1 = mertens_constant_B1(prime_cutoff);
    cs.B2 = constant_B2(prime_cutoff);
    cs.median_leading = std::exp((cs.gamma[0].value - 1.0) * std::exp(-0.5));
    cs.prime_cutoff = prime_cutoff;
    cs.gamma_cutoff = gamma_cutoff;
    return cs;
}

} // namespace medlpf
