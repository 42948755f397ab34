#pragma once

#include "medlpf/base.hpp"
#include "medlpf/lpf_histogram.hpp"
#include "medlpf/sieve.hpp"

namespace medlpf {

// sum_{n<=x} omega(n) via the rearranged prime form sum_{p<=x} floor(x/p).
inline u64 omega_summatory(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "omega_summatory: x must be >= 1");
    u64 s = 0;
    if (x >= 2)
        for_primes(2, x, segment_size, [&](u64 p) { s += x / p; });
    return s;
}

// Same quantity tallied per n by the factor scan; independent route,
// compared against the prime form in tests.
inline u64 omega_summatory_pern(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "omega_summatory_pern: x must be >= 1");
    if (x == 1) return 0;
    return detail::lpf_scan(x, segment_size).omega_sum;
}

// sum_{n<=x} Omega(n) = sum over prime powers p^k <= x of floor(x/p^k).
inline u64 big_omega_summatory(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "big_omega_summatory: x must be >= 1");
    u64 s = 0;
    if (x >= 2)
        for_primes(2, x, segment_size, [&](u64 p) {
            u64 q = p;
            while (q <= x) {
                s += x / q;
                if (q > x / p) break;  // p^{k+1} would exceed x
                q *= p;
            }
        });
    return s;
}

// Per-n route for Omega, from the factor scan.
inline u64 big_omega_summatory_pern(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "big_omega_summatory_pern: x must be >= 1");
    if (x == 1) return 0;
    return detail::lpf_scan(x, segment_size).big_omega_sum;
}

} // namespace medlpf
