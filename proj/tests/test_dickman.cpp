#include "catch_amalgamated.hpp"

#include <cmath>

#include "medlpf/asymptotics.hpp"
#include "medlpf/dickman.hpp"
#include "medlpf/lpf_histogram.hpp"
#include "medlpf/median.hpp"

using namespace medlpf;
using Catch::Approx;

TEST_CASE("rho closed-form branch", "[rho]") {
    CHECK(rho(0.5) == 1.0);
    CHECK(rho(0.0) == 1.0);
    CHECK(rho(1.0) == 1.0);
    CHECK(rho(2.0) == 1.0 - std::log(2.0));  // exact, not mesh
    CHECK(rho(1.5) == 1.0 - std::log(1.5));
}

TEST_CASE("rho is continuous at the branch joins", "[rho]") {
    CHECK(rho(1.0 + 1e-9) == Approx(1.0).margin(1e-8));
    CHECK(rho(2.0 + 1e-6) == Approx(rho(2.0)).margin(1e-5));
}

TEST_CASE("rho marched values against mesh-refined references", "[rho]") {
    CHECK(rho(2.5) == Approx(0.130319562).margin(1e-6));
    CHECK(rho(3.0) == Approx(0.0486084).margin(1e-5));
    CHECK(rho(3.0) == Approx(0.0486083883).margin(1e-6));
    CHECK(rho(4.0) == Approx(0.004910926).margin(1e-6));
    CHECK(rho(5.0) == Approx(0.00035472).margin(1e-6));
}

TEST_CASE("halving the mesh moves rho by less than 1e-6 up to u = 5", "[rho]") {
    const RhoTable coarse(5.0, 2048);
    const RhoTable fine(5.0, 4096);
    for (double u = 2.05; u <= 5.0; u += 0.0625)
        CHECK(std::abs(coarse.value(u) - fine.value(u)) < 1e-6);
}

TEST_CASE("rho is positive and decreasing past u = 1", "[rho]") {
    double prev = rho(1.0);
    for (double u = 1.05; u <= 10.0; u += 0.05) {
        const double v = rho(u);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("rho satisfies its own integral equation on the mesh", "[rho]") {
    // rho(u) = (1/u) int_{u-1}^{u} rho(t) dt, checked with test-side Simpson
    for (double u : {2.5, 3.0, 4.0, 6.5}) {
        const int n = 512;  // even
        const double h = 1.0 / n;
        double s = rho(u - 1.0) + rho(u);
        for (int i = 1; i < n; ++i)
            s += (i % 2 ? 4.0 : 2.0) * rho(u - 1.0 + i * h);
        const double integral = s * h / 3.0;
        CHECK(rho(u) == Approx(integral / u).margin(2e-7));
    }
}

TEST_CASE("rho rejects out-of-range arguments", "[rho]") {
    CHECK_THROWS_AS(rho(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(rho(10.5), std::invalid_argument);
    CHECK_THROWS_AS(RhoTable(1.5), std::invalid_argument);
    CHECK_THROWS_AS(RhoTable(5.0, 4), std::invalid_argument);
}

TEST_CASE("lambda closed form endpoints and identities", "[lambda]") {
    const double x = 1e6;
    const double lif = li_f_auto(x);
    // u = 1 endpoint: the log term vanishes
    const LambdaValue at_x = lambda_closed_form(x, x);
    CHECK(at_x.u == 1.0);
    CHECK(at_x.value == Approx(x + lif).epsilon(1e-12));
    CHECK(std::abs(at_x.value - x) / x == Approx(lif / x).epsilon(1e-9));

    // value/x = rho(u) + li_f(x)/x for 1 < u < 2
    for (double theta : {0.55, 0.7, 0.9}) {
        const LambdaValue v = lambda_closed_form(x, std::pow(x, theta));
        CHECK(v.u == Approx(1.0 / theta).epsilon(1e-12));
        CHECK(v.value / x == Approx(rho(v.u) + lif / x).epsilon(1e-12));
    }
}

TEST_CASE("lambda closed form rejects y at or below sqrt(x)", "[lambda]") {
    CHECK_THROWS_AS(lambda_closed_form(1e6, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_closed_form(1e6, 999.0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_closed_form(1e6, 1e6 + 1), std::invalid_argument);
}

TEST_CASE("lambda tracks the exact smooth count at y = x^0.6", "[lambda]") {
    const double x = 1e6;
    const double y = std::pow(x, 0.6);
    const LambdaValue lam = lambda_closed_form(x, y);
    const u64 psi = psi_smooth_count(1000000, static_cast<u64>(y));
    CHECK(std::abs(lam.value - static_cast<double>(psi)) / x <= 0.01);
}

TEST_CASE("Saias expansion", "[lambda]") {
    const double x = 1e6;
    const double y = std::pow(x, 0.6);
    // n = 0 is exactly x rho(u)
    const LambdaValue s0 = lambda_saias(x, y, 0);
    CHECK(s0.value == x * rho(std::log(x) / std::log(y)));
    // the k = 1 coefficient is -c_0 = a_1 under a_k = (-1)^k c_{k-1}
    CHECK(-default_c()[0] == Approx(-0.422784).margin(1e-6));
    // n = 2 agrees with the closed form at the x/log^3 x scale
    const LambdaValue s2 = lambda_saias(x, y, 2);
    const LambdaValue cf = lambda_closed_form(x, y);
    CHECK(std::abs(s2.value - cf.value) <= 4.0 * x / std::pow(std::log(x), 3));
}

TEST_CASE("Saias guards its validity window", "[lambda]") {
    const double x = 1e6;
    // u within 0.05 of an integer is rejected
    CHECK_THROWS_AS(lambda_saias(x, std::pow(x, 1.0 / 1.03), 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_saias(x, std::pow(x, 1.0 / 1.98), 2), std::invalid_argument);
    CHECK_NOTHROW(lambda_saias(x, std::pow(x, 1.0 / 1.5), 2));
    CHECK_THROWS_AS(lambda_saias(x, std::pow(x, 0.6), 5), std::invalid_argument);
}

TEST_CASE("median via Lambda: bisection against the closed-form exponent", "[lambda]") {
    for (double x : {1e3, 1e6}) {
        const double ystar = median_via_lambda(x);
        const double exponent = std::log(ystar) / std::log(x);
        const MedianPrediction pred = median_predictor_lif(x);
        CHECK(std::abs(exponent - pred.exponent) <= 1e-10);
        // solver residual
        const double resid = lambda_closed_form(x, ystar).value - 0.5 * x;
        CHECK(std::abs(resid) <= 1e-6 * x);
    }
}

TEST_CASE("median via Lambda against frozen solutions and the sieve", "[lambda]") {
    CHECK(median_via_lambda(1e3) == Approx(48.3856).margin(0.01));
    CHECK(median_via_lambda(1e4) == Approx(199.0670).margin(0.01));
    CHECK(median_via_lambda(1e5) == Approx(812.1797).margin(0.01));
    CHECK(median_via_lambda(1e6) == Approx(3300.5146).margin(0.01));

    const double ystar = median_via_lambda(1e6);
    const double exact = static_cast<double>(median_lpf_direct(1000000).median);
    CHECK(std::abs(ystar - exact) / ystar <= 0.05);

    // monotone in x
    double prev = 0.0;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
        const double v = median_via_lambda(x);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("median via Lambda rejects small x", "[lambda]") {
    CHECK_THROWS_AS(median_via_lambda(999.0), std::invalid_argument);
}
