"""Exact arithmetic in F = Q(sqrt(d)) and its ideals O_F and D_F^-1."""

from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy import factorint

from ..errors import InvalidInputError
from .models import FieldElem, FieldSpec, to_mpf


@lru_cache(maxsize=None)
def make_field(d: int) -> FieldSpec:
    """Build the field spec for a square-free negative integer d."""
    if not isinstance(d, int) or isinstance(d, bool):
        raise InvalidInputError(f"d must be an integer, got {d!r}")
    if d >= 0:
        raise InvalidInputError(f"d must be negative, got {d}")
    if any(e > 1 for e in factorint(-d).values()):
        raise InvalidInputError(f"d={d} is not square-free")
    disc = d if d % 4 == 1 else 4 * d
    return FieldSpec(d=d, disc=disc)


def conj(e: FieldElem) -> FieldElem:
    return e.conj()


def norm(e: FieldElem):
    return e.norm()


def trace(e: FieldElem):
    return e.trace()


def embed(e: FieldElem, precision: int = 53) -> mpmath.mpc:
    """Complex value of e with Im(delta) > 0."""
    if precision < 53:
        raise InvalidInputError(f"precision must be at least 53 bits, got {precision}")
    return e.embed(precision)


def in_OF(e: FieldElem) -> bool:
    return e.is_integral()


def in_inv_different(e: FieldElem) -> bool:
    """True iff delta * e lies in O_F."""
    return (e.field.delta() * e).is_integral()


def unit_group(spec: FieldSpec) -> list[FieldElem]:
    """Roots of unity of O_F."""
    one, zeta = spec.one(), spec.zeta()
    if spec.d == -1:
        return [one, zeta, -one, -zeta]
    if spec.d == -3:
        # zeta = (1 + sqrt(-3))/2 is a primitive sixth root of unity
        return [zeta ** k for k in range(6)]
    return [one, -one]


def _real(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return to_mpf(x)
    return mpmath.mpmathify(x)


def as_mpc(value, prec: int = 53) -> mpmath.mpc:
    """Complex number from a FieldElem, a Python number or an mpmath value."""
    if isinstance(value, FieldElem):
        return value.embed(prec)
    with mpmath.workprec(prec):
        if isinstance(value, (tuple, list)):
            re, im = value
            return mpmath.mpc(_real(re), _real(im))
        if isinstance(value, mpmath.mpc):
            return value
        return mpmath.mpc(value)
