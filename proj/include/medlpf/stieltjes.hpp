#pragma once

#include <cmath>
#include <vector>

#include "medlpf/base.hpp"
#include "medlpf/compensated.hpp"

namespace medlpf {

inline constexpr u64 kDefaultStieltjesCutoff = 10'000'000;
inline constexpr int kMaxStieltjesIndex = 8;

struct StieltjesValue {
    double value = 0.0;
    double claimed_error = 0.0;
};

// gamma_0 .. gamma_{n_max} in one pass over k <= m, from the limit
// definition sum (log k)^n / k - (log m)^{n+1}/(n+1) with the first
// Euler-Maclaurin correction -(log m)^n/(2m). The claimed error is the
// next correction term |f'(m)|/12 plus the cancellation floor of the
// subtraction.
inline std::vector<StieltjesValue> stieltjes_all(int n_max, u64 m_cutoff = kDefaultStieltjesCutoff) {
    require(n_max >= 0 && n_max <= kMaxStieltjesIndex, "stieltjes: n out of range (0..8)");
    require(m_cutoff >= 1000, "stieltjes: m_cutoff too small");

    std::vector<CompensatedSum> sums(n_max + 1);
    for (u64 k = 1; k <= m_cutoff; ++k) {
        const double lk = std::log(static_cast<double>(k));
        double term = 1.0 / static_cast<double>(k);
        sums[0].add(term);
        for (int n = 1; n <= n_max; ++n) {
            term *= lk;
            sums[n].add(term);
        }
    }

    const double m = static_cast<double>(m_cutoff);
    const double L = std::log(m);
    std::vector<StieltjesValue> out(n_max + 1);
    double Ln = 1.0;  // L^n
    for (int n = 0; n <= n_max; ++n) {
        const double integral = Ln * L / (n + 1);
        const double correction = Ln / (2.0 * m);
        out[n].value = sums[n].value() - integral - correction;
        const double next_term = (Ln + (n == 0 ? 0.0 : n * Ln / L)) / (12.0 * m * m);
        const double cancellation = 4e-16 * integral;
        out[n].claimed_error = next_term + cancellation;
        Ln *= L;
    }
    return out;
}

// gamma_n, the n-th Stieltjes constant (gamma_0 is Euler-Mascheroni).
inline StieltjesValue stieltjes(int n, u64 m_cutoff = kDefaultStieltjesCutoff) {
    return stieltjes_all(n, m_cutoff)[static_cast<size_t>(n)];
}

} // namespace medlpf
