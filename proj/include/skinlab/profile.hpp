#pragma once

#include "skinlab/moebius.hpp"

#include <array>
#include <functional>

namespace skinlab {

/// alpha(t) = (pi + theta(t)) / (2 L(t)).
double alpha(double t);

/// beta(x, t) = acos(cosh(x L) / cosh(L)) / L for x in [0, 1].
/// Non-negative, zero exactly at x = 1.  Throws on x outside [0, 1].
double beta(double x, double t);

/// F(x, t) = alpha(t) - beta(x, t); strictly increasing in x, F(1,t) = alpha(t).
double profile_f(double x, double t);

/// dF/dx in the cancellation-free form
///   sinh(x L) / sqrt(sinh((1+x) L) sinh((1-x) L)),
/// finite on [0, 1); returns +infinity at x = 1.
double profile_f_dx(double x, double t);

/// The four circles bounding the grafted-annulus region, in the order
///   1: (0, e^L)   2: (0, 1)   3: (e^L cosh L, e^L sinh L)
///   4: (e^{i(pi+theta)} cosh L, sinh L).
/// Circles 2 and 3 are tangent at z = 1; circle 4 is internally tangent to 1.
struct GraftCircles {
    std::array<Complex, 4> center;
    std::array<double, 4> radius;
};

GraftCircles graft_circles(double t);

/// Samples the four bounding arcs, applies the normalizing map
///   z -> (log|z| + i arg z - i (pi+theta)/2) / L,   arg in (0, 2 pi),
/// and returns the maximum deviation of the images from the claimed
/// straightened boundary: vertical lines {Re w = 0}, {Re w = 1} and the
/// graphs of F and -F(1-x).
double normalize_check(double t, int samples);

/// Region between the graphs of upper(x) and -upper(1-x) over x in [0, 1].
struct ProfileRegion {
    double t;     // NaN for synthetic regions
    double alpha; // upper(1)
    std::function<double(double)> upper;
    std::function<double(double)> upper_dx;
    int grid_resolution = 1024;

    double lower(double x) const { return -upper(1.0 - x); }
    double lower_dx(double x) const { return upper_dx(1.0 - x); }
    double height(double x) const { return upper(x) - lower(x); }

    /// The deformation-family region at parameter t (requires t above the
    /// cusp parameter so the region has positive height).
    static ProfileRegion family(double t);
    /// Width-1 rectangle of the given height, centered on the x-axis.
    static ProfileRegion rectangle(double aspect);
};

/// Pointwise containment of the inner family region in the outer one.
struct Containment {
    bool contains;
    double min_margin;     // min over grid of F(x, outer_t) - F(x, inner_t)
    double max_margin;
    double at_x;           // abscissa achieving the minimum
    double analytic_bound; // alpha-difference minus the maximal beta gap
};

Containment region_contains(double outer_t, double inner_t, int grid = 1024);

} // namespace skinlab
