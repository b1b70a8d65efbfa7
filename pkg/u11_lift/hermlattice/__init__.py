"""U(1,1) Borcherds lift toolkit - Hermitian lattice package."""

from .lattice import (
    ZL_of_Z,
    Y_of_tau,
    bilinear,
    complex_bilinear,
    ebasis,
    ell,
    ell_prime,
    embed_tau,
    gram_matrix,
    herm,
    herm_numeric,
    is_unimodular,
    lorentz_vector,
    orthogonal_tau,
    qform,
    real_bilinear,
    scalar_action,
    split_ZL,
    standard_generators,
    z_of_tau,
)
from .models import LatticeVector, TubePoint

__all__ = [
    "LatticeVector",
    "TubePoint",
    "herm",
    "herm_numeric",
    "bilinear",
    "qform",
    "ell",
    "ell_prime",
    "ebasis",
    "lorentz_vector",
    "standard_generators",
    "gram_matrix",
    "is_unimodular",
    "orthogonal_tau",
    "scalar_action",
    "real_bilinear",
    "z_of_tau",
    "embed_tau",
    "Y_of_tau",
    "ZL_of_Z",
    "complex_bilinear",
    "split_ZL",
]
