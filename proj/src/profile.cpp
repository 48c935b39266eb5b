#include "skinlab/profile.hpp"

#include "skinlab/convex_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skinlab {

namespace {

constexpr double kPi = std::numbers::pi;

double acos_clamped(double x, const char* who)
{
    constexpr double slack = 1e-14;
    if (x > 1.0) {
        if (x > 1.0 + slack)
            throw std::domain_error(std::string(who) + ": acos argument > 1");
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - slack)
            throw std::domain_error(std::string(who) + ": acos argument < -1");
        x = -1.0;
    }
    return std::acos(x);
}

// arg with branch (0, 2 pi].
double arg_positive(const Complex& z)
{
    const double a = std::arg(z);
    return a > 0.0 ? a : a + 2.0 * kPi;
}

void require_unit_x(double x, const char* who)
{
    if (!(x >= 0.0) || x > 1.0)
        throw std::domain_error(std::string(who) + ": x must lie in [0, 1]");
}

} // namespace

double alpha(double t)
{
    return (kPi + theta(t)) / (2.0 * biglen(t));
}

double beta(double x, double t)
{
    require_unit_x(x, "beta");
    const double L = biglen(t);
    return acos_clamped(std::cosh(x * L) / std::cosh(L), "beta") / L;
}

double profile_f(double x, double t)
{
    return alpha(t) - beta(x, t);
}

double profile_f_dx(double x, double t)
{
    require_unit_x(x, "profile_f_dx");
    if (x == 1.0) return std::numeric_limits<double>::infinity();
    const double L = biglen(t);
    // d/dx [ -acos(cosh(xL)/cosh L)/L ] without the cancellation in
    // cosh^2 L - cosh^2 xL  (= sinh((1+x)L) sinh((1-x)L)).
    return std::sinh(x * L) /
           std::sqrt(std::sinh((1.0 + x) * L) * std::sinh((1.0 - x) * L));
}

GraftCircles graft_circles(double t)
{
    const double L = biglen(t);
    const double th = theta(t);
    const double eL = std::exp(L);
    GraftCircles g;
    g.center = {Complex{0.0}, Complex{0.0}, Complex{eL * std::cosh(L)},
                std::polar(std::cosh(L), kPi + th)};
    g.radius = {eL, 1.0, eL * std::sinh(L), std::sinh(L)};
    return g;
}

double normalize_check(double t, int samples)
{
    if (samples < 1)
        throw std::invalid_argument("normalize_check: samples must be >= 1");
    const double L = biglen(t);
    const double th = theta(t);
    const GraftCircles g = graft_circles(t);
    const double phi1 = std::acos(1.0 / std::cosh(L));

    const auto normalize = [&](const Complex& z) -> Complex {
        if (z == Complex(0.0))
            throw std::domain_error("normalize_check: sample at the origin");
        const double a = arg_positive(z);
        if (a >= 2.0 * kPi)
            throw std::domain_error("normalize_check: sample on the branch cut");
        return Complex{std::log(std::abs(z)), a - 0.5 * (kPi + th)} / L;
    };
    const auto upper = [&](double x) { return profile_f(x, t); };
    const auto lower = [&](double x) { return -profile_f(1.0 - x, t); };

    double worst = 0.0;
    const auto record = [&worst](double dev) { worst = std::max(worst, dev); };

    // Arc angle endpoints of circles 3 and 4 (from the tangency/extremity
    // points identified in the region description).
    const Complex z3 = std::polar(std::exp(L), phi1); // on circles 1 and 3
    const Complex z4 = std::polar(1.0, (kPi + th) - phi1); // on circles 2 and 4
    const double psi3 = std::arg(z3 - g.center[2]);
    const double psi4 = std::arg(z4 - g.center[3]);

    for (int j = 0; j < samples; ++j) {
        const double s = (j + 0.5) / samples;

        // circle 1, angles [phi1, pi + theta] -> {Re w = 1}
        {
            const Complex z = std::polar(g.radius[0], phi1 + s * ((kPi + th) - phi1));
            record(std::abs(normalize(z).real() - 1.0));
        }
        // circle 2, angles (0, (pi + theta) - phi1] -> {Re w = 0}
        {
            const Complex z = std::polar(1.0, s * ((kPi + th) - phi1));
            record(std::abs(normalize(z).real()));
        }
        // circle 3, angles [psi3, pi] -> lower graph
        {
            const Complex z = g.center[2] + std::polar(g.radius[2], psi3 + s * (kPi - psi3));
            const Complex w = normalize(z);
            record(std::abs(w.imag() - lower(w.real())));
        }
        // circle 4, angles [psi4, pi + theta] -> upper graph
        {
            const Complex z = g.center[3] + std::polar(g.radius[3], psi4 + s * ((kPi + th) - psi4));
            const Complex w = normalize(z);
            record(std::abs(w.imag() - upper(w.real())));
        }
    }
    return worst;
}

ProfileRegion ProfileRegion::family(double t)
{
    if (!(t > t0().value) || t > 1.0)
        throw std::domain_error(
            "ProfileRegion::family: parameter must lie in (t0, 1]");
    ProfileRegion r;
    r.t = t;
    r.alpha = skinlab::alpha(t);
    r.upper = [t](double x) { return profile_f(x, t); };
    r.upper_dx = [t](double x) { return profile_f_dx(x, t); };
    return r;
}

ProfileRegion ProfileRegion::rectangle(double aspect)
{
    if (!(aspect > 0.0))
        throw std::invalid_argument("ProfileRegion::rectangle: aspect must be positive");
    ProfileRegion r;
    r.t = std::numeric_limits<double>::quiet_NaN();
    r.alpha = aspect / 2.0;
    r.upper = [aspect](double) { return aspect / 2.0; };
    r.upper_dx = [](double) { return 0.0; };
    return r;
}

Containment region_contains(double outer_t, double inner_t, int grid)
{
    if (grid < 2)
        throw std::invalid_argument("region_contains: grid must be >= 2");
    Containment c;
    c.min_margin = std::numeric_limits<double>::infinity();
    c.max_margin = -std::numeric_limits<double>::infinity();
    c.at_x = 0.0;
    for (int i = 0; i <= grid; ++i) {
        const double x = double(i) / grid;
        const double m = profile_f(x, outer_t) - profile_f(x, inner_t);
        if (m < c.min_margin) {
            c.min_margin = m;
            c.at_x = x;
        }
        c.max_margin = std::max(c.max_margin, m);
    }
    c.contains = c.min_margin > 0.0;
    // The margin equals the alpha difference minus the beta gap; the gap is
    // positive with maximum at x = 0 when inner_t < outer_t and negative
    // (helping) when inner_t > outer_t, where the binding point is x = 1.
    const double dalpha = alpha(outer_t) - alpha(inner_t);
    const double beta_gap = beta(0.0, outer_t) - beta(0.0, inner_t);
    c.analytic_bound = inner_t < outer_t ? dalpha - beta_gap : dalpha;
    return c;
}

} // namespace skinlab
