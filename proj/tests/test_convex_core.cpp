#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skinlab/convex_core.hpp"

#include <cmath>

using namespace skinlab;

namespace {

// independent re-evaluation of the three core polynomials
double ref_p1(double t)
{
    const double t2 = t * t;
    return 1 + 8 * t2 + 21 * t2 * t2 - 2 * t2 * t2 * t2;
}
double ref_p2(double t)
{
    const double t2 = t * t;
    return 2 * t2 * (1 + t2) * (1 + t2);
}
double ref_p3(double t)
{
    const double t2 = t * t;
    return 4 * t2 * t2 * t * (3 - t2);
}

} // namespace

TEST_CASE("core polynomials match their definitions")
{
    for (int k = 1; k <= 50; ++k) {
        const double t = k / 50.0;
        const CorePolys p = core_polys(t);
        CHECK(p.p1 == doctest::Approx(ref_p1(t)).epsilon(1e-14));
        CHECK(p.p2 == doctest::Approx(ref_p2(t)).epsilon(1e-14));
        CHECK(p.p3 == doctest::Approx(ref_p3(t)).epsilon(1e-14));
    }
}

TEST_CASE("anchor values: cosh(2L) and cos(theta) are exact rationals")
{
    CHECK(std::cosh(2 * biglen(1.0)) == doctest::Approx(7.0 / 2).epsilon(1e-14));
    CHECK(std::cosh(2 * biglen(0.5)) ==
          doctest::Approx(137.0 / 25).epsilon(1e-14));
    CHECK(std::cosh(2 * biglen(0.4)) ==
          doctest::Approx(43897.0 / 6728).epsilon(1e-14));

    CHECK(std::cos(theta(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(theta(1.0) == doctest::Approx(0.0));
    CHECK(std::cos(theta(0.5)) == doctest::Approx(11.0 / 25).epsilon(1e-14));
    CHECK(std::cos(theta(0.4)) ==
          doctest::Approx(1136.0 / 4205).epsilon(1e-14));
}

TEST_CASE("theta and L are positive and theta vanishes only at the endpoint")
{
    for (int k = 1; k < 50; ++k) {
        const double t = 0.05 + 0.94 * k / 50.0;
        CHECK(biglen(t) > 0.0);
        CHECK(theta(t) > 0.0);
        CHECK(theta(t) < 3.141592653589793);
    }
}

TEST_CASE("cusp parameter: closed form, quartic root, trace-shift sign change")
{
    const CuspParameter c = t0();
    const double closed =
        0.5 * (5 + 3 * std::sqrt(3.0) -
               std::sqrt(44 + 26 * std::sqrt(3.0)));
    CHECK(std::abs(c.value - closed) < 1e-15);
    CHECK(std::string(c.closed_form).find("sqrt") != std::string::npos);

    CHECK(std::abs(cusp_quartic(c.value)) < 1e-12);
    // simple root: the quartic changes sign across t0
    CHECK(cusp_quartic(c.value - 1e-6) * cusp_quartic(c.value + 1e-6) < 0.0);

    CHECK(trace_shift_eta(c.value - 1e-6) * trace_shift_eta(c.value + 1e-6) <
          0.0);
}

TEST_CASE("trace shifts: rational anchors and a decimal spot value")
{
    CHECK(trace_shift_xi(1.0) == doctest::Approx(-5.0).epsilon(1e-14));
    CHECK(trace_shift_eta(1.0) == doctest::Approx(-32.0).epsilon(1e-14));
    CHECK(trace_shift_eta(0.3) == doctest::Approx(1.855).epsilon(5e-4));

    // direct polynomial re-evaluation
    for (int k = 1; k <= 30; ++k) {
        const double t = k / 30.0, t2 = t * t;
        const double sx =
            (-1 - 6 * t2 - 17 * t2 * t2 + 4 * t2 * t2 * t2) /
            (t2 * (1 + t2) * (1 + t2));
        const double p4 = std::pow(1 + t2, 4);
        const double se =
            4 * (1 - 34 * t2 * t2 - 96 * t2 * t2 * t2 + std::pow(t2, 4)) / p4;
        CHECK(trace_shift_xi(t) == doctest::Approx(sx).epsilon(1e-12));
        CHECK(trace_shift_eta(t) == doctest::Approx(se).epsilon(1e-12));
    }
}

TEST_CASE("translation lengths: ell_xi = 4L, ell_eta finite only above cusp")
{
    const double cusp = t0().value;
    for (double t : {0.45, 0.6, 0.85, 1.0}) {
        const CoreLengths l = lengths(t);
        CHECK(l.ell_xi == doctest::Approx(4 * biglen(t)).epsilon(1e-13));
        CHECK(l.ell_eta > 0.0);
    }
    CHECK_THROWS_AS((void)lengths(cusp - 0.01), std::domain_error);
    CHECK(std::isnan(bend_data(cusp - 0.01).ell_eta));
    // eta length collapses toward the cusp
    CHECK(lengths(cusp + 1e-4).ell_eta < lengths(cusp + 1e-2).ell_eta);
    CHECK(lengths(cusp + 1e-6).ell_eta < 0.05);
}

TEST_CASE("cross-ratio bending angle agrees with the closed form")
{
    const double lo = t0().value + 0.01;
    for (int k = 0; k < 100; ++k) {
        const double t = lo + (0.99 - lo) * k / 99.0;
        const Complex cr = bending_cross_ratio(t);
        CHECK(cr.imag() > 0.0);
        CHECK(std::abs(bending_angle_crossratio(t) - theta(t)) < 1e-8);
    }
}

TEST_CASE("support-plane discriminator: sqrt(2) +- sqrt((7+5 sqrt 2)/2)")
{
    const SupportTest s = support_discriminant();
    const double root = std::sqrt((7 + 5 * std::sqrt(2.0)) / 2);
    CHECK(std::abs(s.first - (std::sqrt(2.0) + root)) < 1e-10);
    CHECK(std::abs(s.second - (std::sqrt(2.0) - root)) < 1e-10);
    CHECK(s.first > 0.0);
    CHECK(s.second < 0.0);
    CHECK(s.radius > 0.0);
}

TEST_CASE("bend_data is consistent with the individual functions")
{
    for (double t : {0.5, 0.75, 1.0}) {
        const BendData d = bend_data(t);
        CHECK(d.theta == doctest::Approx(theta(t)).epsilon(1e-15));
        CHECK(d.biglen == doctest::Approx(biglen(t)).epsilon(1e-15));
        CHECK(d.alpha ==
              doctest::Approx((3.141592653589793 + d.theta) / (2 * d.biglen))
                  .epsilon(1e-14));
        CHECK(d.ell_xi == doctest::Approx(lengths(t).ell_xi).epsilon(1e-15));
    }
}

TEST_CASE("monotone families: L decreasing, trace ordinate increasing")
{
    double prev_len = biglen(1.0 / 500.0);
    for (int k = 2; k <= 500; ++k) {
        const double len = biglen(k / 500.0);
        CHECK(len < prev_len);
        prev_len = len;
    }
}
