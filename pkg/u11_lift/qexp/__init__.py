"""U(1,1) Borcherds lift toolkit - q-expansion package."""

from .models import QSeries
from .series import (
    J_CONSTANT,
    coeff,
    delta_series,
    e4_series,
    e6_series,
    euler_product,
    evaluate,
    faber_basis,
    faber_jn,
    form_from_principal,
    is_weakly_holomorphic,
    j_series,
    j_series_from_e6,
    poincare_constant,
    poincare_series,
    principal_part,
    sigma,
    sigma3,
)

__all__ = [
    "QSeries",
    "J_CONSTANT",
    "coeff",
    "sigma",
    "sigma3",
    "euler_product",
    "delta_series",
    "e4_series",
    "e6_series",
    "j_series",
    "j_series_from_e6",
    "faber_basis",
    "faber_jn",
    "poincare_constant",
    "poincare_series",
    "principal_part",
    "form_from_principal",
    "is_weakly_holomorphic",
    "evaluate",
]
