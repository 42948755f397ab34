#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace medlpf {

using u8  = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Default span covered by one sieve segment (numbers, not bits).
inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;
inline constexpr u64 kMinSegmentSize = 64;

// Memory/runtime budget for exact integer-side operations.
inline constexpr u64 kMaxSieveBound = u64{1'000'000'000};

// floor(sqrt(n)) for u64
inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // first twelve primes as witnesses: deterministic for all 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 v = detail::powmod(a, d, n);
        if (v == 1 || v == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            v = detail::mulmod(v, v, n);
            if (v == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace medlpf
