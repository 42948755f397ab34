#include "catch_amalgamated.hpp"

#include <cmath>

#include "medlpf/lif.hpp"

using namespace medlpf;
using Catch::Approx;

namespace {

// Brute-force midpoint rule on the t-side integral int_2^x {x/t}/log t dt.
double lif_midpoint_oracle(double x, long points) {
    const double h = (x - 2.0) / static_cast<double>(points);
    double s = 0.0;
    for (long i = 0; i < points; ++i) {
        const double t = 2.0 + (static_cast<double>(i) + 0.5) * h;
        const double q = x / t;
        s += (q - std::floor(q)) / std::log(t);
    }
    return s * h;
}

} // namespace

TEST_CASE("Gauss-Legendre rule construction", "[quadrature]") {
    for (int order : {2, 4, 8, 16}) {
        const GaussLegendre g = make_gauss_legendre(order);
        double wsum = 0.0;
        for (double w : g.weight) wsum += w;
        CHECK(wsum == Approx(2.0).epsilon(1e-14));
        // exact for polynomials of degree 2*order - 1
        const double cubic = gl_integrate([](double t) { return t * t * t + t * t; }, -1.0, 1.0, g);
        CHECK(cubic == Approx(2.0 / 3.0).epsilon(1e-14));
    }
    const GaussLegendre g8 = make_gauss_legendre(8);
    CHECK(gl_integrate([](double t) { return std::sin(t); }, 0.0, M_PI, g8)
          == Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS(make_gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("quadrature matches the midpoint oracle at x = 4", "[lif]") {
    const double frozen = 0.850167407318223;  // 1e6-point midpoint value
    CHECK(lif_midpoint_oracle(4.0, 1000000) == Approx(frozen).epsilon(1e-6));
    CHECK(lif_quadrature_value(4.0) == Approx(frozen).epsilon(1e-6));
    CHECK(lif_quadrature_value(6.0) == Approx(1.40278258321463).epsilon(1e-6));
}

TEST_CASE("quadrature at decade points", "[lif]") {
    CHECK(lif_quadrature_value(1e4) == Approx(538.203851).margin(1e-3));
    CHECK(lif_quadrature_value(1e6) == Approx(33701.499252).margin(1e-1));
    CHECK(lif_quadrature_value(1e7) == Approx(284385.345425).margin(1.0));
}

TEST_CASE("li_f * log(x) / x approaches c_0 from above", "[lif]") {
    const double c0 = 1.0 - 0.5772156649;
    for (double x : {1e6, 1e7, 1e8}) {
        const double ratio = lif_quadrature_value(x) * std::log(x) / x;
        CHECK(ratio == Approx(c0).margin(0.15));
        CHECK(ratio > c0);  // the 1/log x correction is positive
    }
}

TEST_CASE("quadrature is invariant under doubling the rule order", "[lif]") {
    for (double x : {1e4, 1e5, 1e6}) {
        const double v8 = lif_quadrature_value(x, 8);
        const double v16 = lif_quadrature_value(x, 16);
        CHECK(std::abs(v8 - v16) <= 1e-9 * std::abs(v8));
    }
}

TEST_CASE("quadrature vs expansion(3) at 1e7", "[lif]") {
    const double quad = lif_quadrature_value(1e7);
    const double exp3 = lif_expansion_value(1e7, 3, default_c());
    const double bound = 10.0 * 1e7 / std::pow(std::log(1e7), 4);
    CHECK(std::abs(quad - exp3) <= bound);
}

TEST_CASE("li_f wrapper modes", "[lif]") {
    const LifValue q = li_f(1e5, LifMode::quadrature);
    CHECK(q.mode == LifMode::quadrature);
    CHECK(q.value > 0.0);
    CHECK(q.value < 1e5);
    CHECK(q.error_estimate > 0.0);

    const LifValue e = li_f(1e5, LifMode::expansion, 4);
    CHECK(e.mode == LifMode::expansion);
    CHECK(e.expansion_order == 4);
    CHECK(e.value > 0.0);
    CHECK(e.value < 1e5);
    // asymptotic-series error estimate is the first omitted term; the true
    // gap stays within a small multiple of it at these x
    CHECK(std::abs(q.value - e.value) <= 5.0 * e.error_estimate);

    const LifValue e7 = li_f(1e7, LifMode::expansion, 4);
    CHECK(std::abs(lif_quadrature_value(1e7) - e7.value) <= 5.0 * e7.error_estimate);
}

TEST_CASE("li_f_auto selects by cap", "[lif]") {
    CHECK(li_f_auto(1e6) == lif_quadrature_value(1e6));
    const double beyond = 2e8;  // above the quadrature cap
    CHECK(li_f_auto(beyond) == lif_expansion_value(beyond, 4, default_c()));
}

TEST_CASE("li_f domain validation", "[lif]") {
    CHECK_THROWS_AS(lif_quadrature_value(3.9), std::invalid_argument);
    CHECK_THROWS_AS(lif_quadrature_value(2e8), std::invalid_argument);
    CHECK_THROWS_AS(lif_expansion_value(50.0, 2, default_c()), std::invalid_argument);
    CHECK_THROWS_AS(lif_expansion_value(1e5, 0, default_c()), std::invalid_argument);
    CHECK_THROWS_AS(lif_expansion_value(1e5, 7, default_c()), std::invalid_argument);
}
