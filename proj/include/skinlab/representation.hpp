#pragma once

#include "skinlab/moebius.hpp"
#include "skinlab/words.hpp"

#include <array>
#include <vector>

namespace skinlab {

/// One point of the deformation family: det-1 images of the two handlebody
/// generators at parameter t.
struct RepPoint {
    double t;
    Moebius gen_a;
    Moebius gen_b;
};

/// Closed-form generator images at parameter t in (0, 1].
/// Throws std::domain_error outside the parameter range.
RepPoint rep_at(double t);

/// Evaluate a freely reduced word left-to-right in the representation.
Moebius evaluate_word(const RepPoint& rep, const Word& w);

/// Closed form for the trace of the image of delta1*delta2:
///   2 t^2 (t^4 - 22 t^2 - 7)/(1+t^2)^3  +  i (t^2-1)(5 t^2+1)^2 / (t (1+t^2)^3).
Complex delta12_trace_closed(double t);

/// The orientation-reversing symmetry z -> i t / conj(z) of the family.
AntiMoebius involution_at(double t);

/// Defects of the six conjugation identities satisfied by the involution,
/// measured as entrywise distance (up to sign) between det-1 representatives.
struct SymmetryReport {
    double t = 0.0;
    double tol = 0.0;
    std::array<double, 6> defect{};
    std::array<bool, 6> ok{};
    bool all_ok() const;
};

SymmetryReport check_symmetry(double t, double tol = 1e-9);

/// Orbit of the fixed points of the image of xi under all freely reduced
/// words of length <= depth; finite points are deduplicated at spherical
/// resolution 1e-6 and sorted by (re, im).
struct Orbit {
    std::vector<Complex> points;
    int infinite_count = 0;
    int depth = 0; // word-length bound the orbit was generated with
};

Orbit limit_orbit(double t, int depth);

/// Largest chordal distance from the involution image of an interior orbit
/// point (word length <= depth - 3) to the nearest point of the orbit.  The
/// conjugation identities place those images back inside the orbit exactly,
/// so the defect measures numerical error; points from the three outermost
/// word shells are excluded as probes because their images land in deeper
/// shells the finite sample does not contain.
double orbit_symmetry_defect(const Orbit& orbit, double t);

} // namespace skinlab
