"""U(1,1) Borcherds lift toolkit - products, Weyl chambers and Heegner points for Q(sqrt(d))."""

__version__ = "0.1.0"

from .borcherds import EvalResult, ProductParams, eta, xi_const, xi_f, xi_jn, zero_order
from .config import Config, load_config
from .errors import (
    ConvergenceError,
    CuspError,
    DivisorHitError,
    InconclusiveError,
    InsufficientPrecisionError,
    InvalidInputError,
    LiftError,
    NotHeegnerError,
    WallError,
)
from .heegner import HeegnerPoint, enumerate_heegner, heegner_point, reduce_point
from .hermlattice import LatticeVector, TubePoint
from .qexp import QSeries, faber_jn
from .qfield import FieldElem, FieldSpec, make_field
from .weyl import Chamber, Wall, WeylVector, chambers

__all__ = [
    "load_config",
    "Config",
    "LiftError",
    "InvalidInputError",
    "InsufficientPrecisionError",
    "NotHeegnerError",
    "CuspError",
    "ConvergenceError",
    "InconclusiveError",
    "WallError",
    "DivisorHitError",
    "FieldSpec",
    "FieldElem",
    "make_field",
    "LatticeVector",
    "TubePoint",
    "QSeries",
    "faber_jn",
    "Chamber",
    "Wall",
    "WeylVector",
    "chambers",
    "HeegnerPoint",
    "heegner_point",
    "enumerate_heegner",
    "reduce_point",
    "ProductParams",
    "EvalResult",
    "eta",
    "xi_const",
    "xi_f",
    "xi_jn",
    "zero_order",
]
