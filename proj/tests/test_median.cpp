#include "catch_amalgamated.hpp"

#include <algorithm>
#include <vector>

#include "medlpf/lpf_histogram.hpp"
#include "medlpf/median.hpp"

using namespace medlpf;

namespace {

// Sort-based oracle over trial-division P(n) values.
struct MedianOracle {
    std::vector<u64> lpf;  // lpf[n] for n <= x_max

    explicit MedianOracle(u64 x_max) : lpf(x_max + 1, 1) {
        for (u64 n = 2; n <= x_max; ++n) {
            u64 best = 1, m = n;
            for (u64 d = 2; d * d <= m; ++d)
                while (m % d == 0) { best = d; m /= d; }
            lpf[n] = (m > 1) ? m : best;
        }
    }

    u64 median(u64 x) const {
        std::vector<u64> vals(lpf.begin() + 1, lpf.begin() + static_cast<long>(x) + 1);
        const u64 m = (x + 1) / 2;
        std::nth_element(vals.begin(), vals.begin() + static_cast<long>(m - 1), vals.end());
        return vals[m - 1];
    }
};

} // namespace

TEST_CASE("direct median on hand-computed small cases", "[median]") {
    CHECK(median_lpf_direct(10).median == 3);
    CHECK(median_lpf_direct(10).rank_m == 5);
    CHECK(median_lpf_direct(2).median == 1);   // multiset {1, 2}, rank 1
    CHECK(median_lpf_direct(2).rank_m == 1);
    CHECK(median_lpf_direct(3).median == 2);   // {1, 2, 3}, rank 2
}

TEST_CASE("direct median matches a frozen small-x table", "[median]") {
    const std::vector<std::pair<u64, u64>> table = {
        {2, 1},  {3, 2},  {4, 2},  {5, 2},  {6, 2},  {7, 3},  {8, 2},
        {9, 3},  {10, 3}, {11, 3}, {12, 3}, {20, 3}, {21, 5}, {30, 5},
        {100, 11}, {1000, 43},
    };
    for (const auto& [x, expected] : table)
        CHECK(median_lpf_direct(x).median == expected);
}

TEST_CASE("direct median equals the sort oracle for x <= 2000", "[median]") {
    const MedianOracle oracle(2000);
    for (u64 x = 2; x <= 2000; ++x)
        REQUIRE(median_lpf_direct(x).median == oracle.median(x));
}

TEST_CASE("median satisfies the order-statistic bracket", "[median]") {
    for (u64 x : {10ull, 100ull, 1000ull, 12345ull}) {
        const MedianResult r = median_lpf_direct(x);
        REQUIRE(psi_smooth_count(x, r.median) >= r.rank_m);
        if (r.median > 1)
            REQUIRE(psi_smooth_count(x, r.median - 1) < r.rank_m);
    }
}

TEST_CASE("tailsum median agrees with direct where valid", "[median]") {
    for (u64 x : {100ull, 1000ull, 10000ull, 100000ull}) {
        const MedianResult d = median_lpf_direct(x);
        const MedianResult t = median_lpf_tailsum(x);
        REQUIRE(t.median == d.median);
        CHECK(t.method == MedianMethod::tailsum);
        CHECK(t.median > isqrt(x));
    }
}

TEST_CASE("tailsum falls back below the validity floor", "[median]") {
    // crossing prime for x = 10 is 3 <= sqrt(10), so the descending pass
    // cannot certify it and the direct path answers
    const MedianResult t = median_lpf_tailsum(10);
    CHECK(t.median == 3);
    CHECK(t.method == MedianMethod::direct);
    // every x in [2, 200] still yields a correct answer one way or the other
    const MedianOracle oracle(200);
    for (u64 x = 2; x <= 200; ++x)
        REQUIRE(median_lpf_tailsum(x).median == oracle.median(x));
}

TEST_CASE("median is segment-size invariant", "[median]") {
    for (u64 seg : {u64{64}, u64{4096}}) {
        CHECK(median_lpf_direct(100000, seg).median == median_lpf_direct(100000).median);
        CHECK(median_lpf_tailsum(100000, seg).median == median_lpf_tailsum(100000).median);
    }
}

TEST_CASE("median rejects x < 2", "[median]") {
    CHECK_THROWS_AS(median_lpf_direct(1), std::invalid_argument);
    CHECK_THROWS_AS(median_lpf_tailsum(0), std::invalid_argument);
}
