#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "medlpf/asymptotics.hpp"
#include "medlpf/base.hpp"
#include "medlpf/dickman.hpp"
#include "medlpf/lpf_histogram.hpp"
#include "medlpf/median.hpp"
#include "medlpf/omega.hpp"
#include "medlpf/prime_sums.hpp"

namespace medlpf {

// One x-value's exact quantities, predicted quantities, and residual
// ingredients; serializable to CSV/JSON with a single shared schema.
struct VerificationRow {
    u64 x = 0;
    u64 median_exact = 0;
    double predictor_lif = 0.0;
    double predictor_leading = 0.0;
    double ratio_leading = 0.0;
    double frac_sum = 0.0;
    double lif = 0.0;
    u64 omega_sum_exact = 0;
    double omega_sum_model = 0.0;
    u64 psi_at_y06 = 0;
    double lambda_at_y06 = 0.0;
};

inline constexpr std::array<const char*, 11> kVerificationFields = {
    "x",
    "median_exact",
    "predictor_lif",
    "predictor_leading",
    "ratio_leading",
    "frac_sum",
    "lif",
    "omega_sum_exact",
    "omega_sum_model",
    "psi_at_y06",
    "lambda_at_y06",
};

// Floating output pinned to 12 significant digits.
inline std::string format_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline VerificationRow make_verification_row(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1000, "verification row: x must be >= 1e3");
    VerificationRow r;
    r.x = x;
    r.median_exact = median_lpf_direct(x, segment_size).median;
    const MedianPrediction pred = median_predictor_lif(static_cast<double>(x));
    r.predictor_lif = pred.predictor_lif;
    r.predictor_leading = pred.predictor_leading;
    r.ratio_leading = static_cast<double>(r.median_exact) / pred.predictor_leading;
    r.frac_sum = frac_sum_primes(x, segment_size);
    r.lif = li_f_auto(static_cast<double>(x));
    r.omega_sum_exact = omega_summatory(x, segment_size);
    r.omega_sum_model = omega_sum_model(static_cast<double>(x));
    const double y = std::pow(static_cast<double>(x), 0.6);
    r.psi_at_y06 = psi_smooth_count(x, static_cast<u64>(y), segment_size);
    r.lambda_at_y06 = lambda_closed_form(static_cast<double>(x), y).value;
    return r;
}

inline std::string verification_csv(std::span<const VerificationRow> rows) {
    std::string out;
    for (size_t i = 0; i < kVerificationFields.size(); ++i) {
        if (i) out += ',';
        out += kVerificationFields[i];
    }
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.x);
        out += ',' + std::to_string(r.median_exact);
        out += ',' + format_sig12(r.predictor_lif);
        out += ',' + format_sig12(r.predictor_leading);
        out += ',' + format_sig12(r.ratio_leading);
        out += ',' + format_sig12(r.frac_sum);
        out += ',' + format_sig12(r.lif);
        out += ',' + std::to_string(r.omega_sum_exact);
        out += ',' + format_sig12(r.omega_sum_model);
        out += ',' + std::to_string(r.psi_at_y06);
        out += ',' + format_sig12(r.lambda_at_y06);
        out += '\n';
    }
    return out;
}

inline std::string verification_json(std::span<const VerificationRow> rows) {
    std::string out = "[";
    bool first_row = true;
    for (const auto& r : rows) {
        if (!first_row) out += ',';
        first_row = false;
        out += "\n  {";
        const std::array<std::string, 11> vals = {
            std::to_string(r.x),
            std::to_string(r.median_exact),
            format_sig12(r.predictor_lif),
            format_sig12(r.predictor_leading),
            format_sig12(r.ratio_leading),
            format_sig12(r.frac_sum),
            format_sig12(r.lif),
            std::to_string(r.omega_sum_exact),
            format_sig12(r.omega_sum_model),
            std::to_string(r.psi_at_y06),
            format_sig12(r.lambda_at_y06),
        };
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) out += ", ";
            out += '"';
            out += kVerificationFields[i];
            out += "\": ";
            out += vals[i];
        }
        out += '}';
    }
    out += "\n]\n";
    return out;
}

} // namespace medlpf
