#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skinlab/convex_core.hpp"
#include "skinlab/profile.hpp"

#include <cmath>
#include <complex>

using namespace skinlab;

TEST_CASE("alpha ties the graph family to the bending data")
{
    for (double t : {0.42, 0.5, 0.75, 1.0}) {
        CHECK(alpha(t) ==
              doctest::Approx((3.141592653589793 + theta(t)) / (2 * biglen(t)))
                  .epsilon(1e-15));
        CHECK(profile_f(1.0, t) == alpha(t)); // beta(1, t) vanishes exactly
        CHECK(beta(1.0, t) == 0.0);
    }
    // decimal spot values for the half-width
    CHECK(alpha(1.0) == doctest::Approx(1.6321256513182483).epsilon(1e-12));
    CHECK(alpha(0.5) == doctest::Approx(1.7842032083344845).epsilon(1e-12));
}

TEST_CASE("profile graph is strictly increasing with an infinite end slope")
{
    for (double t : {0.45, 0.6, 1.0}) {
        double prev = profile_f(0.0, t);
        for (int k = 1; k <= 200; ++k) {
            const double x = k / 200.0;
            const double cur = profile_f(x, t);
            CHECK(cur > prev);
            prev = cur;
        }
        CHECK(std::isinf(profile_f_dx(1.0, t)));
        CHECK(profile_f_dx(0.0, t) == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("analytic slope matches central differences")
{
    const double h = 1e-6;
    for (double t : {0.45, 0.7, 1.0}) {
        for (int k = 1; k < 20; ++k) {
            const double x = k / 20.0 * 0.95;
            const double fd =
                (profile_f(x + h, t) - profile_f(x - h, t)) / (2 * h);
            CHECK(profile_f_dx(x, t) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("beta gap: two-sided bound over parameter pairs")
{
    // 0 < beta(x,t2) - beta(x,t1) < beta(0,t2) - beta(0,t1)
    // for 0 < t1 < t2 < 1 and x in (0,1)
    std::vector<double> ts(50);
    for (int i = 0; i < 50; ++i) ts[i] = 0.02 + 0.96 * i / 49.0;
    for (size_t i = 0; i < ts.size(); ++i) {
        for (size_t j = i + 1; j < ts.size(); j += 7) {
            const double gap0 = beta(0.0, ts[j]) - beta(0.0, ts[i]);
            CHECK(gap0 > 0.0);
            for (int k = 1; k < 50; ++k) {
                const double x = k / 50.0;
                const double gap = beta(x, ts[j]) - beta(x, ts[i]);
                CHECK(gap > 0.0);
                CHECK(gap < gap0);
            }
        }
    }
}

TEST_CASE("mixed second difference of beta is negative on the interior")
{
    const double hx = 1e-4, ht = 1e-4;
    for (int a = 1; a < 10; ++a) {
        const double x = a / 10.0;
        for (int b = 1; b < 10; ++b) {
            const double t = 0.1 + 0.8 * b / 10.0;
            const double mixed =
                (beta(x + hx, t + ht) - beta(x - hx, t + ht) -
                 beta(x + hx, t - ht) + beta(x - hx, t - ht)) /
                (4 * hx * ht);
            CHECK(mixed < 0.0);
        }
    }
}

TEST_CASE("grafting circles: tangency identities")
{
    for (double t : {0.45, 0.5, 0.8, 1.0}) {
        const GraftCircles g = graft_circles(t);
        const double L = biglen(t);
        CHECK(std::abs(g.center[0]) < 1e-15);
        CHECK(g.radius[0] == doctest::Approx(std::exp(L)).epsilon(1e-13));
        CHECK(std::abs(g.center[1]) < 1e-15);
        CHECK(g.radius[1] == doctest::Approx(1.0).epsilon(1e-15));

        // inner circle of the third arc is tangent to the unit circle at 1
        CHECK(std::abs(g.center[2]) - g.radius[2] ==
              doctest::Approx(g.radius[1]).epsilon(1e-12));
        CHECK(std::abs(g.center[2] - 1.0) ==
              doctest::Approx(g.radius[2]).epsilon(1e-12));

        // fourth circle is internally tangent to the outer circle
        CHECK(std::abs(g.center[3]) + g.radius[3] ==
              doctest::Approx(g.radius[0]).epsilon(1e-12));
        const Complex touch =
            std::polar(std::exp(L), std::arg(g.center[3]));
        CHECK(std::abs(g.center[3] - touch) ==
              doctest::Approx(g.radius[3]).epsilon(1e-12));
    }
}

TEST_CASE("log-coordinate normalization maps the arcs onto the graphs")
{
    for (double t : {0.45, 0.5, 0.7, 1.0}) {
        CHECK(normalize_check(t, 64) < 1e-12);
    }
}

TEST_CASE("region family and synthetic rectangle")
{
    const ProfileRegion r = ProfileRegion::family(0.5);
    CHECK(r.alpha == doctest::Approx(alpha(0.5)).epsilon(1e-15));
    for (int k = 0; k <= 16; ++k) {
        const double x = k / 16.0;
        CHECK(r.upper(x) == doctest::Approx(profile_f(x, 0.5)).epsilon(1e-15));
        CHECK(r.lower(x) ==
              doctest::Approx(-profile_f(1.0 - x, 0.5)).epsilon(1e-15));
        CHECK(r.height(x) > 0.0);
    }

    // a width-1 rectangle of height `aspect`, centered on the axis
    const ProfileRegion rect = ProfileRegion::rectangle(2.5);
    CHECK(rect.upper(0.3) == doctest::Approx(1.25));
    CHECK(rect.lower(0.9) == doctest::Approx(-1.25));
    CHECK(rect.height(0.5) == doctest::Approx(2.5));
    CHECK(std::isnan(rect.t));

    CHECK_THROWS_AS((void)ProfileRegion::family(0.2), std::domain_error);
    CHECK_THROWS_AS((void)ProfileRegion::rectangle(-1.0),
                    std::invalid_argument);
}

TEST_CASE("containment of the unit-parameter region in the half-parameter one")
{
    const Containment c = region_contains(0.5, 1.0);
    CHECK(c.contains);
    CHECK(c.min_margin ==
          doctest::Approx(0.15207755701623626).epsilon(1e-9));
    // the margin is tightest at the right edge where both graphs hit alpha
    CHECK(c.at_x == doctest::Approx(1.0));
    CHECK(c.min_margin >= c.analytic_bound - 1e-12);
    CHECK(c.analytic_bound > 0.0);
}

TEST_CASE("containment of the two-fifths region in the half-parameter one")
{
    const Containment c = region_contains(0.5, 0.4);
    CHECK(c.contains);
    CHECK(c.min_margin == doctest::Approx(0.03231161086692724).epsilon(1e-9));
    CHECK(c.min_margin >= c.analytic_bound - 1e-12);
    CHECK(c.analytic_bound > 0.0);
}

TEST_CASE("containment fails in the reverse direction")
{
    const Containment c = region_contains(1.0, 0.5);
    CHECK_FALSE(c.contains);
    CHECK(c.min_margin < 0.0);
}
