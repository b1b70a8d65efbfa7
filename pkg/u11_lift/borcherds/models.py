"""Product evaluation models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from ..errors import InvalidInputError
from ..jsonio import complex_pair, digits_for, mp_str, rational_to_dict
from ..weyl import WeylVector

REGIONS = ("conservative", "theorem")
MIN_PREC_BITS = 64


@dataclass(frozen=True)
class ProductParams:
    """Truncation and precision settings for one product evaluation.

    max_kl bounds |k*l| of the included factor families. region selects the
    enforced convergence region: "conservative" needs Im(tau) > 2n, "theorem"
    needs |delta| * Im(tau) > 2n. With chamber_check set, evaluating the
    expansion of a chamber that does not contain Y is an error.
    """
    max_kl: int = 40
    prec_bits: int = 128
    tail_margin: float = 0.0
    region: str = "conservative"
    chamber_check: bool = False

    def __post_init__(self):
        if self.prec_bits < MIN_PREC_BITS:
            raise InvalidInputError(f"prec_bits must be >= {MIN_PREC_BITS}, got {self.prec_bits}")
        if self.max_kl < 1:
            raise InvalidInputError(f"max_kl must be >= 1, got {self.max_kl}")
        if self.region not in REGIONS:
            raise InvalidInputError(f"region must be one of {', '.join(REGIONS)}, got {self.region!r}")
        if self.tail_margin < 0:
            raise InvalidInputError(f"tail_margin must be >= 0, got {self.tail_margin}")


@dataclass
class EvalResult:
    """Value of a Borcherds product at one point, with its truncation data."""
    value: mpmath.mpc
    log_abs: mpmath.mpf
    factor_count: int
    tail_bound: mpmath.mpf
    weight: Fraction
    weyl: Optional[WeylVector] = None
    max_factor_modulus: mpmath.mpf = mpmath.mpf(0)
    outside_chamber: bool = False
    prec_bits: int = 128

    def to_dict(self, digits: Optional[int] = None) -> dict:
        digits = digits or digits_for(self.prec_bits)
        out = {
            "value": complex_pair(self.value, digits),
            "log_abs": mp_str(self.log_abs, digits),
            "tail_bound": mpmath.nstr(self.tail_bound, 6),
            "factor_count": self.factor_count,
            "weight": rational_to_dict(self.weight),
            "max_factor_modulus": mpmath.nstr(self.max_factor_modulus, 6),
            "outside_chamber": self.outside_chamber,
            "precision": {"bits": self.prec_bits, "digits": digits},
        }
        if self.weyl is not None:
            out["weyl"] = {"rho1": rational_to_dict(self.weyl.rho1), "rho2": rational_to_dict(self.weyl.rho2)}
        return out
