"""Weyl chambers of index m in the positive cone of K = Z e3 + Z e4.

The walls of index m are the rays t^2 * y2 = |m| * y1 for the positive divisors t of |m|.
"""

from fractions import Fraction
from typing import Union

import mpmath
from sympy import divisors as _sympy_divisors

from ..errors import InvalidInputError
from ..hermlattice import Y_of_tau
from ..qfield import FieldSpec, to_mpf
from .models import Chamber, Wall, WeylVector

DEFAULT_WALL_TOLERANCE = 1e-12


def divisors(n: int) -> list[int]:
    if n < 1:
        raise InvalidInputError(f"divisors needs n >= 1, got {n}")
    return [int(t) for t in _sympy_divisors(n)]


def _check_index(m: int) -> None:
    if not isinstance(m, int) or m >= 0:
        raise InvalidInputError(f"chamber index m must be a negative integer, got {m!r}")


def chambers(m: int) -> list[Chamber]:
    """[W(0,1), W(t1,t2), ..., W(|m|,inf)], the order in which they are traversed clockwise."""
    _check_index(m)
    bounds = [0] + divisors(-m) + [None]
    return [Chamber(m, lo, hi) for lo, hi in zip(bounds, bounds[1:])]


def check_chamber(m: int, W: Chamber) -> None:
    if W.m != m:
        raise InvalidInputError(f"chamber {W.label()} has index {W.m}, expected {m}")
    if W not in chambers(m):
        raise InvalidInputError(f"{W.label()} is not a chamber of index {m}")


def chamber_from_bounds(m: int, t_lo: int, t_hi) -> Chamber:
    W = Chamber(m, int(t_lo), None if t_hi is None else int(t_hi))
    check_chamber(m, W)
    return W


def _exact(y) -> bool:
    return isinstance(y, (int, Fraction))


def wall_sign(lhs, rhs, tolerance: float) -> int:
    """Sign of lhs - rhs, 0 when within the relative tolerance (inexact inputs)."""
    if _exact(lhs) and _exact(rhs):
        return (lhs > rhs) - (lhs < rhs)
    lhs, rhs = mpmath.mpf(lhs), mpmath.mpf(rhs)
    if abs(lhs - rhs) <= tolerance * max(abs(lhs), abs(rhs)):
        return 0
    return 1 if lhs > rhs else -1


def chamber_of_Y(m: int, Y, tolerance: float = DEFAULT_WALL_TOLERANCE) -> Union[Chamber, Wall]:
    """Chamber containing Y = (y1, y2), or the wall Y lies on."""
    _check_index(m)
    y1, y2 = Y
    if _exact(y1) and _exact(y2):
        y1, y2 = Fraction(y1), Fraction(y2)
    else:
        y1 = y1 if not isinstance(y1, Fraction) else to_mpf(y1)
        y2 = y2 if not isinstance(y2, Fraction) else to_mpf(y2)
    if y1 <= 0 or y2 <= 0:
        raise InvalidInputError("Y must lie in the positive cone (y1 > 0, y2 > 0)")
    n = -m
    lo = 0
    for t in divisors(n):
        sign = wall_sign(n * y1, t * t * y2, tolerance)
        if sign == 0:
            return Wall(m, t)
        if sign < 0:
            return Chamber(m, lo, t)
        lo = t
    return Chamber(m, lo, None)


def chamber_of_tau(m: int, tau, spec: FieldSpec, tolerance: float = DEFAULT_WALL_TOLERANCE,
                   prec: int = 128) -> Union[Chamber, Wall]:
    return chamber_of_Y(m, Y_of_tau(tau, spec, prec), tolerance)


def mirror_chamber(W: Chamber) -> Chamber:
    """Image of W under (y1, y2) -> (y2, y1)."""
    n = W.n
    lo = 0 if W.t_hi is None else n // W.t_hi
    hi = None if W.t_lo == 0 else n // W.t_lo
    return Chamber(W.m, lo, hi)


def wall_slopes(m: int) -> list[tuple[int, Fraction]]:
    """(t, t^2/|m|): the wall t is the ray y1 = (t^2/|m|) * y2."""
    _check_index(m)
    return [(t, Fraction(t * t, -m)) for t in divisors(-m)]


def strip_bounds(m: int, spec: FieldSpec, prec: int = 53) -> list[tuple[int, mpmath.mpf]]:
    """(t, |delta| t^2 / (2|m|)): the walls as horizontal lines Im(tau) = const in H."""
    with mpmath.workprec(prec):
        half = spec.abs_delta(prec) / 2
        return [(t, half * to_mpf(s)) for t, s in wall_slopes(m)]


def wall_crossing_vector(m: int, t: int) -> WeylVector:
    """The norm-m vector t*e3 - (|m|/t)*e4 orthogonal to the wall t.

    Passing from W(., t) to W(t, .) adds this vector to the Weyl vector.
    """
    _check_index(m)
    if (-m) % t:
        raise InvalidInputError(f"{t} does not divide {-m}")
    return WeylVector(t, Fraction(m, t))
