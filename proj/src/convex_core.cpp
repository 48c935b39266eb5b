#include "skinlab/convex_core.hpp"

#include "skinlab/representation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace skinlab {

namespace {

void require_param(double t, const char* who)
{
    if (!(t > 0.0) || t > 1.0)
        throw std::domain_error(std::string(who) + ": parameter must lie in (0, 1]");
}

// acos with a tiny tolerance for arguments pushed past +-1 by rounding.
double safe_acos(double x, const char* who)
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

double safe_acosh(double x, const char* who)
{
    constexpr double slack = 1e-12;
    if (x < 1.0) {
        if (x < 1.0 - slack)
            throw std::domain_error(std::string(who) + ": acosh argument < 1");
        x = 1.0;
    }
    return std::acosh(x);
}

// -tr(eta)/2 on the canonical lift.
double eta_trace_half(double t)
{
    const double t2 = t * t;
    const double t4 = t2 * t2;
    const double den = std::pow(1.0 + t2, 4);
    return (-1.0 + 4.0 * t2 + 74.0 * t4 + 196.0 * t4 * t2 - t4 * t4) / den;
}

} // namespace

CorePolys core_polys(double t)
{
    const double t2 = t * t;
    const double t4 = t2 * t2;
    return CorePolys{
        1.0 + 8.0 * t2 + 21.0 * t4 - 2.0 * t4 * t2,
        2.0 * t2 * (1.0 + t2) * (1.0 + t2),
        4.0 * t4 * t * (3.0 - t2),
    };
}

double theta(double t)
{
    require_param(t, "theta");
    const CorePolys p = core_polys(t);
    return safe_acos(p.p3 / p.p2, "theta");
}

double biglen(double t)
{
    require_param(t, "biglen");
    const CorePolys p = core_polys(t);
    return 0.5 * safe_acosh(p.p1 / p.p2, "biglen");
}

CoreLengths lengths(double t)
{
    require_param(t, "lengths");
    const CorePolys p = core_polys(t);
    const double ell_xi = 2.0 * safe_acosh(p.p1 / p.p2, "lengths(xi)");
    const double ell_eta = 2.0 * safe_acosh(eta_trace_half(t), "lengths(eta)");
    return CoreLengths{ell_xi, ell_eta};
}

double trace_shift_xi(double t)
{
    if (!(t > 0.0))
        throw std::domain_error("trace_shift_xi: parameter must be positive");
    const double t2 = t * t;
    const double t4 = t2 * t2;
    return (-1.0 - 6.0 * t2 - 17.0 * t4 + 4.0 * t4 * t2) /
           (t2 * (1.0 + t2) * (1.0 + t2));
}

double trace_shift_eta(double t)
{
    const double t2 = t * t;
    const double t4 = t2 * t2;
    return 4.0 * (1.0 - 34.0 * t4 - 96.0 * t4 * t2 + t4 * t4) /
           std::pow(1.0 + t2, 4);
}

CuspParameter t0()
{
    const double s3 = std::sqrt(3.0);
    const double value = 0.5 * (5.0 + 3.0 * s3 - std::sqrt(44.0 + 26.0 * s3));
    return CuspParameter{value, "(5 + 3*sqrt(3) - sqrt(44 + 26*sqrt(3)))/2"};
}

double cusp_quartic(double t)
{
    const double s = (1.0 + t * t);
    return s * s - 2.0 * t * (1.0 + 5.0 * t * t);
}

Complex bending_cross_ratio(double t)
{
    if (!(t > t0().value) || t >= 1.0)
        throw std::domain_error(
            "bending_cross_ratio: parameter must lie in (t0, 1)");
    const RepPoint rep = rep_at(t);
    const Moebius xi = evaluate_word(rep, word_xi());
    const auto [p_plus, p_minus] = fixed_points(xi);
    const ExtComplex q4 = evaluate_word(rep, word_delta4())(p_plus);
    const ExtComplex q1 = evaluate_word(rep, word_delta1().inverse())(p_plus);
    return cross_ratio(p_plus, q4, p_minus, q1);
}

double bending_angle_crossratio(double t)
{
    const Complex cr = bending_cross_ratio(t);
    if (!(cr.imag() > 0.0))
        throw std::domain_error("bending_angle_crossratio: cross-ratio left the "
                                "expected branch (Im <= 0)");
    // arg in [0, 2 pi); with Im > 0 this is just the principal argument.
    return std::numbers::pi - std::arg(cr);
}

SupportTest support_discriminant()
{
    const double t = 0.5;
    const RepPoint rep = rep_at(t);
    const Moebius xi = evaluate_word(rep, word_xi());
    const auto [p_plus, p_minus] = fixed_points(xi);
    const ExtComplex q1 = evaluate_word(rep, word_delta1().inverse())(p_plus);

    // Circumcircle of the three bending-line endpoints.
    const Complex z1 = p_plus.value(), z2 = p_minus.value(), z3 = q1.value();
    const Complex w = (z3 - z1) / (z2 - z1);
    const Complex center =
        z1 + (z2 - z1) * (w - Complex(std::norm(w))) /
                 (w - std::conj(w)); // standard 3-point circumcenter formula
    const double radius = std::abs(z1 - center);

    auto [f1, f2] = fixed_points(rep.gen_b);
    Complex fp = f1.value();
    Complex fm = f2.value();
    if (fp.imag() < fm.imag()) std::swap(fp, fm);

    SupportTest out;
    out.center = center;
    out.radius = radius;
    out.fp_plus = fp;
    out.fp_minus = fm;
    out.first = std::norm(fp - center) - radius * radius;
    out.second = std::norm(fm - center) - radius * radius;
    return out;
}

BendData bend_data(double t)
{
    require_param(t, "bend_data");
    BendData d;
    d.t = t;
    d.theta = theta(t);
    d.biglen = biglen(t);
    d.ell_xi = 4.0 * d.biglen;
    const double q = eta_trace_half(t);
    d.ell_eta = q >= 1.0 ? 2.0 * std::acosh(q)
                         : std::numeric_limits<double>::quiet_NaN();
    d.alpha = (std::numbers::pi + d.theta) / (2.0 * d.biglen);
    return d;
}

} // namespace skinlab
