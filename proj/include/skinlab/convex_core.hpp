#pragma once

#include "skinlab/moebius.hpp"

namespace skinlab {

/// The three polynomials controlling the bending data of the family:
///   p1 = 1 + 8 t^2 + 21 t^4 - 2 t^6
///   p2 = 2 t^2 (1 + t^2)^2
///   p3 = 4 t^5 (3 - t^2)
/// On (0,1):  p1 > p2 > 0 and p1' > p2' > 0.
struct CorePolys {
    double p1, p2, p3;
};

CorePolys core_polys(double t);

/// Bending angle theta(t) = acos(p3/p2), branch [0, pi]; theta(1) = 0.
/// Requires t in (0, 1]; throws std::domain_error when the ratio leaves
/// [-1, 1] beyond rounding slack.
double theta(double t);

/// Half-width L(t) = acosh(p1/p2) / 2 of the bent annulus (= ell_xi / 4).
double biglen(double t);

/// Translation lengths of the two pants curves xi and eta.
struct CoreLengths {
    double ell_xi, ell_eta;
};

/// Requires t in (0,1]; the eta length additionally needs t above the cusp
/// parameter (throws std::domain_error when its acosh argument is < 1).
CoreLengths lengths(double t);

/// tr(xi) - 2 on the canonical lift:  (-1 - 6 t^2 - 17 t^4 + 4 t^6) / (t^2 (1+t^2)^2).
/// Strictly negative on (0, 1].
double trace_shift_xi(double t);

/// tr(eta) - 2 on the canonical lift:  4 (1 - 34 t^4 - 96 t^6 + t^8) / (1+t^2)^4,
/// with numerator factorization ((1+t^2)^2 - 2t(1+5t^2)) ((1+t^2)^2 + 2t(1+5t^2)).
/// Positive below the cusp parameter, zero there, negative above.
double trace_shift_eta(double t);

/// The parameter where eta becomes parabolic.
struct CuspParameter {
    double value;            // (5 + 3 sqrt(3) - sqrt(44 + 26 sqrt(3))) / 2
    const char* closed_form; // human-readable exact form
};

CuspParameter t0();

/// (1 + t^2)^2 - 2 t (1 + 5 t^2); its smaller positive root is t0().value.
double cusp_quartic(double t);

/// Cross-ratio of the four ideal points around the bending line,
/// [p+ : g4(p+) : p- : g1^{-1}(p+)], built from fixed points of the xi image
/// and the delta-word images.  Its imaginary part is positive on (t0, 1).
Complex bending_cross_ratio(double t);

/// pi - arg(bending_cross_ratio) with arg taken in [0, 2 pi).  Must agree
/// with theta(t); throws std::domain_error if the cross-ratio leaves the
/// expected branch (nonpositive imaginary part) instead of silently flipping.
double bending_angle_crossratio(double t);

/// Support-plane test at t = 1/2: the circle through the three bending-line
/// endpoints against the two fixed points of gen_b.  The signed quantities
/// |fp - center|^2 - radius^2 come out as sqrt(2) +- sqrt((7 + 5 sqrt(2))/2):
/// one fixed point strictly outside, the other strictly inside.
struct SupportTest {
    Complex center;          // -1/2 - i
    double radius;           // sqrt(5)/2
    Complex fp_plus, fp_minus; // gen_b fixed points, Im(fp_plus) > 0
    double first, second;    // signed square distances: first > 0 > second
};

SupportTest support_discriminant();

/// Summary of the bending data at one parameter.
struct BendData {
    double t;
    double theta;   // bending angle
    double biglen;  // L(t)
    double ell_xi;
    double ell_eta; // NaN at or below the cusp parameter
    double alpha;   // (pi + theta) / (2 L)
};

BendData bend_data(double t);

} // namespace skinlab
