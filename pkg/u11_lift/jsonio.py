"""JSON encodings of exact rationals and mpmath numbers."""

from fractions import Fraction
from typing import Union

import mpmath


def rational_to_dict(x: Union[int, Fraction]) -> dict:
    """Exact rational as {num, den} strings."""
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def mp_str(x, digits: int) -> str:
    return mpmath.nstr(x, digits, strip_zeros=False)


def complex_pair(z, digits: int) -> list[str]:
    z = mpmath.mpc(z)
    return [mp_str(z.real, digits), mp_str(z.imag, digits)]


def digits_for(prec_bits: int) -> int:
    """Decimal digits printed for a result computed at prec_bits."""
    return max(15, int(prec_bits * 0.30103) - 2)
