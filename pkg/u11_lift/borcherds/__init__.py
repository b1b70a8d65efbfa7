"""U(1,1) Borcherds lift toolkit - Borcherds product package."""

from .eta import eta, eta_terms, minus_conj_zeta, psi_const, xi_const
from .models import REGIONS, EvalResult, ProductParams
from .products import (
    check_region,
    convergence_threshold,
    factor_zero_vector,
    growth_constant,
    is_retained,
    retained_pairs,
    tail_bound,
    xi,
    xi_f,
    xi_jn,
)
from .zeros import xi_grid, zero_order

__all__ = [
    "ProductParams",
    "EvalResult",
    "REGIONS",
    "eta",
    "eta_terms",
    "minus_conj_zeta",
    "xi_const",
    "psi_const",
    "is_retained",
    "retained_pairs",
    "convergence_threshold",
    "check_region",
    "growth_constant",
    "tail_bound",
    "xi_jn",
    "xi_f",
    "xi",
    "factor_zero_vector",
    "zero_order",
    "xi_grid",
]
