#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "medlpf/base.hpp"

namespace medlpf {

// Ordered primes in [lo, hi], produced by segmented sieving.
struct PrimeTable {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<u64> primes;
};

// Eratosthenes up to limit; small, used for base primes of the segmented passes.
inline std::vector<u32> simple_sieve(u64 limit) {
    std::vector<u32> out;
    if (limit < 2) return out;
    std::vector<u8> comp(limit + 1, 0);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
    for (u64 i = 2; i <= limit; ++i)
        if (!comp[i]) out.push_back(static_cast<u32>(i));
    return out;
}

namespace detail {

inline void check_sieve_range(u64 lo, u64 hi, u64 segment_size) {
    require(lo <= hi, "sieve: hi < lo");
    require(lo >= 1, "sieve: lo must be >= 1");
    require(hi <= kMaxSieveBound, "sieve: hi exceeds memory budget");
    require(segment_size >= 1, "sieve: segment_size must be >= 1");
}

// Invoke callback; a bool-returning callback may stop the walk early.
template <typename Fn>
inline bool visit_prime(Fn&& fn, u64 p) {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, u64>>) {
        fn(p);
        return true;
    } else {
        return fn(p);
    }
}

// Sieve odd numbers of [seg_lo, seg_hi] into `comp` (comp[j] marks seg_lo + 2j
// composite). seg_lo must be odd.
inline void sieve_odd_segment(u64 seg_lo, u64 seg_hi,
                              const std::vector<u32>& base,
                              std::vector<u64>& comp) {
    const u64 nbits = (seg_hi - seg_lo) / 2 + 1;
    comp.assign((nbits + 63) / 64, 0);
    for (u32 p : base) {
        if (p == 2) continue;
        const u64 pp = u64{p} * p;
        if (pp > seg_hi) break;
        u64 start = ((seg_lo + p - 1) / p) * p;
        if (start < pp) start = pp;
        if ((start & 1) == 0) start += p;
        for (u64 j = start; j <= seg_hi; j += 2 * u64{p}) {
            const u64 bit = (j - seg_lo) / 2;
            comp[bit >> 6] |= u64{1} << (bit & 63);
        }
    }
}

} // namespace detail

// Walk primes of [lo, hi] in ascending order. The callback may return void,
// or bool where false stops the walk. Returns false if stopped early.
template <typename Fn>
bool for_primes(u64 lo, u64 hi, u64 segment_size, Fn&& fn) {
    if (lo > hi) return true;
    detail::check_sieve_range(std::max<u64>(lo, 1), hi, segment_size);
    if (lo <= 2 && hi >= 2)
        if (!detail::visit_prime(fn, 2)) return false;
    u64 cur = std::max<u64>(lo, 3);
    if ((cur & 1) == 0) ++cur;
    if (cur > hi) return true;

    const std::vector<u32> base = simple_sieve(isqrt(hi));
    std::vector<u64> comp;
    for (u64 seg_lo = cur; seg_lo <= hi; ) {
        const u64 seg_hi = std::min(hi, seg_lo + segment_size - 1);
        detail::sieve_odd_segment(seg_lo, seg_hi, base, comp);
        const u64 nbits = (seg_hi - seg_lo) / 2 + 1;
        for (u64 b = 0; b < nbits; ++b) {
            if (!(comp[b >> 6] & (u64{1} << (b & 63)))) {
                const u64 p = seg_lo + 2 * b;
                if (p == 1) continue;
                if (!detail::visit_prime(fn, p)) return false;
            }
        }
        if (seg_hi == hi) break;
        seg_lo = seg_hi + 1;
        if ((seg_lo & 1) == 0) ++seg_lo;
    }
    return true;
}

// Walk primes of [lo, hi] in descending order.
template <typename Fn>
bool for_primes_desc(u64 hi, u64 lo, u64 segment_size, Fn&& fn) {
    if (lo > hi) return true;
    detail::check_sieve_range(std::max<u64>(lo, 1), hi, segment_size);
    const std::vector<u32> base = simple_sieve(isqrt(hi));
    std::vector<u64> comp;
    const u64 odd_lo = std::max<u64>(lo | 1, 3);

    u64 seg_hi = hi;
    if ((seg_hi & 1) == 0) {
        if (seg_hi == 2 && lo <= 2) return detail::visit_prime(fn, 2);
        --seg_hi;
    }
    while (seg_hi >= odd_lo) {
        const u64 seg_lo = (seg_hi >= odd_lo + segment_size - 1)
                               ? ((seg_hi - segment_size + 1) | 1)
                               : odd_lo;
        detail::sieve_odd_segment(seg_lo, seg_hi, base, comp);
        const u64 nbits = (seg_hi - seg_lo) / 2 + 1;
        for (u64 b = nbits; b-- > 0; ) {
            if (!(comp[b >> 6] & (u64{1} << (b & 63)))) {
                const u64 p = seg_lo + 2 * b;
                if (p == 1) continue;
                if (!detail::visit_prime(fn, p)) return false;
            }
        }
        if (seg_lo == odd_lo) break;
        seg_hi = seg_lo - 2;
    }
    if (lo <= 2 && hi >= 2)
        return detail::visit_prime(fn, 2);
    return true;
}

// Exactly the primes in [lo, hi]; result independent of segment_size.
inline PrimeTable primes_in_range(u64 lo, u64 hi, u64 segment_size = kDefaultSegmentSize) {
    require(lo >= 2, "primes_in_range: lo must be >= 2");
    detail::check_sieve_range(lo, hi, segment_size);
    PrimeTable t;
    t.lo = lo;
    t.hi = hi;
    for_primes(lo, hi, segment_size, [&](u64 p) { t.primes.push_back(p); });
    return t;
}

// pi(x) by segmented sieve.
inline u64 prime_count(u64 x, u64 segment_size = kDefaultSegmentSize) {
    if (x < 2) return 0;
    u64 n = 0;
    for_primes(2, x, segment_size, [&](u64) { ++n; });
    return n;
}

} // namespace medlpf
