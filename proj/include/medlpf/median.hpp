#pragma once

#include "medlpf/base.hpp"
#include "medlpf/lpf_histogram.hpp"
#include "medlpf/sieve.hpp"

namespace medlpf {

enum class MedianMethod { direct, tailsum };

// M(x) as an order statistic of {P(n) : n <= x}. rank_m is the
// 1-based rank used (lower median); method records how it was found.
// A tailsum call that had to fall back reports method == direct.
struct MedianResult {
    u64 x = 0;
    u64 median = 0;   // a prime, or 1 in the degenerate small-x cases
    u64 rank_m = 0;
    MedianMethod method = MedianMethod::direct;
};

// Median by ascending cumulative counts: small primes from the factor
// scan, then floor(x/p) per prime above sqrt(x) until rank m is reached.
inline MedianResult median_lpf_direct(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 2, "median_lpf_direct: x must be >= 2");
    const u64 m = (x + 1) / 2;

    MedianResult res;
    res.x = x;
    res.rank_m = m;
    res.method = MedianMethod::direct;

    u64 cum = 1;  // P(1) = 1
    if (cum >= m) {
        res.median = 1;
        return res;
    }
    const auto scan = detail::lpf_scan(x, segment_size);
    for (const auto& [p, c] : scan.small_counts) {
        cum += c;
        if (cum >= m) {
            res.median = p;
            return res;
        }
    }
    for_primes(isqrt(x) + 1, x, segment_size, [&](u64 p) {
        cum += x / p;
        if (cum >= m) {
            res.median = p;
            return false;
        }
        return true;
    });
    return res;
}

// Median by the descending tail identity: accumulate T = sum floor(x/q)
// over primes q descending from x; the median is the prime where
// N - T first drops below rank m. Only meaningful while the running
// prime exceeds sqrt(x) (below that floor(x/p) overcounts); if the
// crossing would occur at or below sqrt(x) this falls back to the
// direct method, reported via method == direct.
inline MedianResult median_lpf_tailsum(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 2, "median_lpf_tailsum: x must be >= 2");
    const u64 m = (x + 1) / 2;

    u64 tail = 0;
    u64 crossing = 0;
    for_primes_desc(x, isqrt(x) + 1, segment_size, [&](u64 p) {
        tail += x / p;
        if (x - tail < m) {
            crossing = p;
            return false;
        }
        return true;
    });
    if (crossing != 0) {
        MedianResult res;
        res.x = x;
        res.median = crossing;
        res.rank_m = m;
        res.method = MedianMethod::tailsum;
        return res;
    }
    return median_lpf_direct(x, segment_size);
}

} // namespace medlpf
