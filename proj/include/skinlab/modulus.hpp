#pragma once

#include "skinlab/profile.hpp"

#include <vector>

namespace skinlab {

/// Normalization statement carried into every output that reports moduli.
inline constexpr const char* kModulusConvention =
    "mod_h = extremal distance between the two graph (horizontal) sides: a "
    "width-1 rectangle of height h has mod_h = h; mod_w swaps the side pairs "
    "(reciprocal)";

/// Conformal modulus of a ProfileRegion quadrilateral, from the Dirichlet
/// energy of a discrete harmonic potential on a boundary-fitted graded grid.
struct ModulusResult {
    double t = 0.0; // NaN for synthetic regions
    double mod_h = 0.0, mod_w = 0.0; // Richardson-extrapolated
    std::vector<int> grid_levels;    // e.g. 32, 64, 128, 256
    std::vector<double> energies_h;  // raw Dirichlet energies per level
    std::vector<double> energies_w;
    double order_h = 0.0, order_w = 0.0; // measured convergence orders
    double est_error = 0.0;              // error estimate for mod_h and mod_w
    bool order_ok = false; // measured orders exceed 1.5 (or exact hit)

    double reciprocity() const { return mod_h * mod_w; }
};

/// Solve on grids base/2^refinements, ..., base/2, base and extrapolate.
/// base_resolution must be >= 32 and divisible by 2^refinements
/// (refinements >= 1); the coarsest grid must keep >= 8 cells per side.
/// Throws std::runtime_error on solver failure or touching graphs.
ModulusResult solve_modulus(const ProfileRegion& region, int base_resolution,
                            int refinements);

/// Independent solves across family parameters (parallel across t; capped by
/// the SKINLAB_THREADS environment variable).
std::vector<ModulusResult> sweep_modulus(const std::vector<double>& ts,
                                         int base_resolution, int refinements);

} // namespace skinlab
