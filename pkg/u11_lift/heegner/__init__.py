"""U(1,1) Borcherds lift toolkit - Heegner point package."""

from .models import HeegnerClass, HeegnerPoint, content
from .points import (
    S_MATRIX,
    act,
    check_orthogonal,
    cm_order,
    enumerate_heegner,
    exact_residual,
    factor_point,
    heegner_counts,
    heegner_divisor,
    heegner_point,
    is_reduced,
    reduce_point,
    reduced_taus,
    residual,
    tau_numeric,
)

__all__ = [
    "HeegnerPoint",
    "HeegnerClass",
    "content",
    "S_MATRIX",
    "heegner_point",
    "cm_order",
    "act",
    "is_reduced",
    "reduce_point",
    "enumerate_heegner",
    "heegner_counts",
    "heegner_divisor",
    "reduced_taus",
    "factor_point",
    "tau_numeric",
    "residual",
    "exact_residual",
    "check_orthogonal",
]
