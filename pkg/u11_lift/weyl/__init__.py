"""U(1,1) Borcherds lift toolkit - Weyl chamber package."""

from .chambers import (
    DEFAULT_WALL_TOLERANCE,
    chamber_from_bounds,
    chamber_of_tau,
    chamber_of_Y,
    chambers,
    check_chamber,
    divisors,
    mirror_chamber,
    strip_bounds,
    wall_crossing_vector,
    wall_sign,
    wall_slopes,
)
from .lift import (
    CONSTANT_WEYL_VECTOR,
    chambers_for_f,
    norm_Y,
    phi_K,
    phi_K_chamber,
    rho_zero,
    verify_whittaker_identity,
    weyl_vector_f,
    weyl_vector_Fm,
    weyl_vector_jn,
    whittaker_check,
    whittaker_m,
)
from .models import Chamber, Wall, WeylVector

__all__ = [
    "Chamber",
    "Wall",
    "WeylVector",
    "DEFAULT_WALL_TOLERANCE",
    "CONSTANT_WEYL_VECTOR",
    "divisors",
    "chambers",
    "check_chamber",
    "chamber_from_bounds",
    "chamber_of_Y",
    "chamber_of_tau",
    "mirror_chamber",
    "wall_sign",
    "wall_slopes",
    "strip_bounds",
    "wall_crossing_vector",
    "norm_Y",
    "phi_K",
    "phi_K_chamber",
    "weyl_vector_Fm",
    "weyl_vector_jn",
    "rho_zero",
    "chambers_for_f",
    "weyl_vector_f",
    "whittaker_m",
    "verify_whittaker_identity",
    "whittaker_check",
]
