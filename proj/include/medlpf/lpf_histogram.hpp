#pragma once

#include <map>
#include <span>
#include <vector>

#include "medlpf/base.hpp"
#include "medlpf/sieve.hpp"

namespace medlpf {

namespace detail {

struct LpfScanResult {
    // (p, #{n <= x : P(n) = p}) for primes p <= sqrt(x), ascending p.
    std::vector<std::pair<u64, u64>> small_counts;
    u64 omega_sum = 0;      // sum of per-n distinct prime factor counts
    u64 big_omega_sum = 0;  // same with multiplicity
};

// Segmented factor pass over [1, x]. Each n has its primes <= sqrt(x)
// divided out; whatever remains above 1 is the (unique) prime factor
// exceeding sqrt(x). Yields the small-prime histogram plus per-n
// omega/Omega tallies in one sweep.
inline LpfScanResult lpf_scan(u64 x, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "lpf_scan: x must be >= 1");
    check_sieve_range(1, x, segment_size);

    const std::vector<u32> base = simple_sieve(isqrt(x));
    LpfScanResult res;
    std::vector<u64> counts(base.size(), 0);

    std::vector<u64> rem(std::min<u64>(segment_size, x));
    std::vector<u32> last(rem.size());   // index+1 into base of last dividing prime
    std::vector<u8> nf(rem.size());      // distinct factors found
    std::vector<u8> mf(rem.size());      // factors with multiplicity

    for (u64 lo = 1; lo <= x; lo += segment_size) {
        const u64 hi = std::min(x, lo + segment_size - 1);
        const u64 len = hi - lo + 1;
        for (u64 i = 0; i < len; ++i) rem[i] = lo + i;
        std::fill_n(last.begin(), len, 0u);
        std::fill_n(nf.begin(), len, u8{0});
        std::fill_n(mf.begin(), len, u8{0});

        for (u32 bi = 0; bi < base.size(); ++bi) {
            const u64 p = base[bi];
            if (p > hi) break;
            for (u64 j = ((lo + p - 1) / p) * p; j <= hi; j += p) {
                const u64 i = j - lo;
                u64 r = rem[i];
                u8 mult = 0;
                do { r /= p; ++mult; } while (r % p == 0);
                rem[i] = r;
                last[i] = bi + 1;
                nf[i] += 1;
                mf[i] += mult;
            }
        }
        for (u64 i = 0; i < len; ++i) {
            const u64 n = lo + i;
            if (n == 1) continue;  // P(1) = 1 handled by the histogram itself
            if (rem[i] > 1) {
                res.omega_sum += nf[i] + 1;
                res.big_omega_sum += mf[i] + 1;
            } else {
                res.omega_sum += nf[i];
                res.big_omega_sum += mf[i];
                counts[last[i] - 1] += 1;
            }
        }
    }

    res.small_counts.reserve(base.size());
    for (u32 bi = 0; bi < base.size(); ++bi)
        if (counts[bi] > 0)
            res.small_counts.emplace_back(base[bi], counts[bi]);
    return res;
}

} // namespace detail

// Multiset of largest prime factors over [1, x], stored as
// prime -> multiplicity aggregates. Only primes p <= sqrt(x) are
// materialized; for p > sqrt(x) the multiplicity is floor(x/p), computed
// on demand. n = 1 contributes the conventional P(1) = 1 entry.
class LpfHistogram {
public:
    explicit LpfHistogram(u64 x, u64 segment_size = kDefaultSegmentSize)
        : x_(x), segment_size_(segment_size) {
        require(x >= 2, "LpfHistogram: x must be >= 2");
        sqrt_x_ = isqrt(x);
        small_ = detail::lpf_scan(x, segment_size).small_counts;
    }

    u64 x() const { return x_; }
    u64 total() const { return x_; }
    u64 sqrt_x() const { return sqrt_x_; }

    // Multiplicity of value v in the multiset {P(n) : n <= x}.
    u64 count(u64 v) const {
        if (v == 1) return 1;
        if (v <= sqrt_x_) {
            auto it = std::lower_bound(small_.begin(), small_.end(), v,
                [](const auto& e, u64 key) { return e.first < key; });
            return (it != small_.end() && it->first == v) ? it->second : 0;
        }
        if (v > x_) return 0;
        return is_prime(v) ? x_ / v : 0;
    }

    // Materialized counts for p <= sqrt(x), ascending.
    std::span<const std::pair<u64, u64>> small_counts() const { return small_; }

    // psi(x, y): cumulative multiplicity up to y, i.e. the y-smooth count.
    u64 psi(u64 y) const {
        require(y >= 1, "psi: y must be >= 1");
        if (y >= x_) return x_;
        if (y >= sqrt_x_) {
            u64 tail = 0;
            for_primes(y + 1, x_, segment_size_, [&](u64 p) { tail += x_ / p; });
            return x_ - tail;
        }
        u64 cum = 1;  // n = 1
        for (const auto& [p, c] : small_) {
            if (p > y) break;
            cum += c;
        }
        return cum;
    }

    // Full prime -> count map including on-demand large primes. Intended
    // for small x (tests, CLI inspection); cost is a prime walk up to x.
    std::map<u64, u64> full_map() const {
        std::map<u64, u64> m;
        m[1] = 1;
        for (const auto& [p, c] : small_) m[p] = c;
        for_primes(sqrt_x_ + 1, x_, segment_size_, [&](u64 p) { m[p] = x_ / p; });
        return m;
    }

private:
    u64 x_;
    u64 segment_size_;
    u64 sqrt_x_;
    std::vector<std::pair<u64, u64>> small_;
};

inline LpfHistogram lpf_histogram(u64 x, u64 segment_size = kDefaultSegmentSize) {
    return LpfHistogram(x, segment_size);
}

// psi(x, y) = #{1 <= n <= x : P(n) <= y}; n = 1 always counts.
inline u64 psi_smooth_count(u64 x, u64 y, u64 segment_size = kDefaultSegmentSize) {
    require(x >= 1, "psi_smooth_count: x must be >= 1");
    require(y >= 1, "psi_smooth_count: y must be >= 1");
    if (y >= x) return x;
    const u64 r = isqrt(x);
    if (y >= r) {
        // every non-y-smooth n <= x has exactly one prime factor in (y, x]
        u64 tail = 0;
        for_primes(y + 1, x, segment_size, [&](u64 p) { tail += x / p; });
        return x - tail;
    }
    return LpfHistogram(x, segment_size).psi(y);
}

} // namespace medlpf
