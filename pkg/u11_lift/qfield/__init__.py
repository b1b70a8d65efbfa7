"""U(1,1) Borcherds lift toolkit - Field package."""

from .field import as_mpc, conj, embed, in_inv_different, in_OF, make_field, norm, trace, unit_group
from .models import FieldElem, FieldSpec, to_mpf

__all__ = [
    "FieldSpec",
    "FieldElem",
    "to_mpf",
    "make_field",
    "conj",
    "norm",
    "trace",
    "embed",
    "in_OF",
    "in_inv_different",
    "unit_group",
    "as_mpc",
]
