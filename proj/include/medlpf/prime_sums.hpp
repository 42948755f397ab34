#pragma once

#include "medlpf/base.hpp"
#include "medlpf/compensated.hpp"
#include "medlpf/sieve.hpp"

namespace medlpf {

// sum_{p<=x} {x/p}. Each term is the exact rational (x mod p)/p, rounded
// once; accumulation is compensated and in fixed ascending prime order so
// the result is independent of segment size.
inline double frac_sum_primes(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 2, "frac_sum_primes: x must be >= 2");
    CompensatedSum s;
    for_primes(2, x, segment_size, [&](u64 p) {
        s.add(static_cast<double>(x % p) / static_cast<double>(p));
    });
    return s.value();
}

// sum_{p<=x} 1/p.
inline double mertens_prime_sum(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 2, "mertens_prime_sum: x must be >= 2");
    CompensatedSum s;
    for_primes(2, x, segment_size, [&](u64 p) {
        s.add(1.0 / static_cast<double>(p));
    });
    return s.value();
}

} // namespace medlpf
