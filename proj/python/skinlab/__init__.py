"""Computations along a one-parameter family of hyperbolic structures.

Thin Python veneer over the C++ core: bending data, grafting profiles,
conformal moduli, limit-set orbits, and the certified inequality suite.
"""

from ._core import (
    MODULUS_CONVENTION,
    alpha,
    bend_data,
    bending_angle_crossratio,
    beta,
    biglen,
    check_symmetry,
    cusp_parameter,
    lengths,
    limit_orbit,
    profile_f,
    rectangle_modulus,
    region_contains,
    solve_modulus,
    theta,
    trace_shift_eta,
    trace_shift_xi,
    verify,
)

__all__ = [
    "MODULUS_CONVENTION",
    "alpha",
    "bend_data",
    "bending_angle_crossratio",
    "beta",
    "biglen",
    "check_symmetry",
    "cusp_parameter",
    "lengths",
    "limit_orbit",
    "profile_f",
    "rectangle_modulus",
    "region_contains",
    "solve_modulus",
    "theta",
    "trace_shift_eta",
    "trace_shift_xi",
    "verify",
]

__version__ = "1.0.0"
