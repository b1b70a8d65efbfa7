"""Heegner points tau_lambda, their minimal equations, CM orders and SL2(Z)-reduction."""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import product

import mpmath

from ..errors import CuspError, InvalidInputError, NotHeegnerError
from ..hermlattice import LatticeVector, herm, herm_numeric, orthogonal_tau, qform, z_of_tau
from ..qfield import FieldElem, FieldSpec, in_OF
from .models import HeegnerClass, HeegnerPoint, content

logger = logging.getLogger(__name__)

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

S_MATRIX: Matrix2 = ((0, -1), (1, 0))


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InvalidInputError(f"{what} = {x} is not an integer; lambda is not a lattice vector")
    return x.numerator


def heegner_point(l1: FieldElem, l2: FieldElem) -> HeegnerPoint:
    """Heegner point of lambda = l1*ell + l2*ell' with l1, l2 in O_F."""
    if l1.field != l2.field:
        raise InvalidInputError("l1 and l2 lie in different fields")
    if not (in_OF(l1) and in_OF(l2)):
        raise InvalidInputError(f"coordinates must lie in O_F, got {l1}, {l2}")
    m = _as_int(qform(LatticeVector.from_frame(l1, l2)), "<lambda, lambda>")
    if not l2:
        raise CuspError(f"lambda = {l1}*ell is proportional to ell (m = {m})")
    if m >= 0:
        raise NotHeegnerError(f"<lambda, lambda> = {m} is not negative")
    A = _as_int(l2.norm(), "N(l2)")
    B = -_as_int((l1 * l2.conj()).trace(), "tr(l1*conj(l2))")
    C = _as_int(l1.norm(), "N(l1)")
    q = content(A, B, C)
    return HeegnerPoint(l1, l2, m, A, B, C, q, -m // q, (l1 / l2).conj())


def cm_order(h: HeegnerPoint) -> tuple[int, str]:
    """Conductor f = |m|/q of the CM order Z + f*O_F of tau_lambda."""
    f = h.conductor
    return f, "O_F" if f == 1 else f"Z + {f}*O_F"


def act(h: HeegnerPoint, gamma: Matrix2) -> HeegnerPoint:
    """gamma = ((a, b), (c, d)) in SL2(Z) sends lambda to (a*l1 + b*l2, c*l1 + d*l2).

    tau_lambda moves by the Moebius transformation of gamma; m is unchanged.
    """
    (a, b), (c, d) = gamma
    if a * d - b * c != 1:
        raise InvalidInputError(f"{gamma} is not in SL2(Z)")
    return heegner_point(a * h.l1 + b * h.l2, c * h.l1 + d * h.l2)


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def is_reduced(h: HeegnerPoint) -> bool:
    """|B| <= A <= C, with B >= 0 when |B| = A or A = C."""
    A, B, C = h.A, h.B, h.C
    if not (abs(B) <= A <= C):
        return False
    if abs(B) == A or A == C:
        return B >= 0
    return True


def reduce_point(h: HeegnerPoint) -> HeegnerPoint:
    """SL2(Z)-equivalent point with tau in the standard fundamental domain."""
    steps = 0
    while True:
        A, B = h.A, h.B
        s = _ceil_div(B - A, 2 * A)
        if s:
            h = act(h, ((1, s), (0, 1)))
        if h.A > h.C or (h.A == h.C and h.B < 0):
            h = act(h, S_MATRIX)
            steps += 1
            continue
        break
    logger.debug("reduced heegner point to %s after %d inversions", h.tau, steps)
    return h


def _canonical(coords: tuple[int, ...]) -> bool:
    """True for the member of {lambda, -lambda} whose first nonzero coordinate is positive."""
    for x in coords:
        if x:
            return x > 0
    return False


def _zeta_coefficient(spec: FieldSpec, a: int, b: int, c: int, e: int) -> Fraction:
    # <lambda, lambda> is the zeta-coordinate of l1*conj(l2)
    return (spec.elem(a, b) * spec.elem(c, e).conj()).b


def _box(m: int, spec: FieldSpec, coord_bound: int):
    if m >= 0:
        raise InvalidInputError(f"m must be negative, got {m}")
    if coord_bound < 1:
        raise InvalidInputError(f"coord_bound must be >= 1, got {coord_bound}")
    r = range(-coord_bound, coord_bound + 1)
    for a, b, c, e in product(r, r, r, r):
        if (c, e) == (0, 0):
            continue
        if _zeta_coefficient(spec, a, b, c, e) == m:
            yield a, b, c, e


def enumerate_heegner(m: int, spec: FieldSpec, coord_bound: int) -> list[HeegnerPoint]:
    """All Heegner points of norm m with coordinates in the box, one per pair +-lambda."""
    points = [
        heegner_point(spec.elem(a, b), spec.elem(c, e))
        for a, b, c, e in _box(m, spec, coord_bound)
        if _canonical((a, b, c, e))
    ]
    points.sort(key=HeegnerPoint.sort_key)
    logger.debug("enumerated %d heegner points for m=%d, d=%d, bound=%d", len(points), m, spec.d, coord_bound)
    return points


def heegner_counts(m: int, spec: FieldSpec, coord_bound: int) -> tuple[int, int]:
    """(raw, identified): vectors of norm m in the box, with and without lambda ~ -lambda."""
    raw = sum(1 for _ in _box(m, spec, coord_bound))
    return raw, raw // 2


def _tau_key(tau: FieldElem) -> tuple[Fraction, Fraction]:
    return tau.real_part(), tau.imag_over_abs_delta()


def heegner_divisor(m: int, spec: FieldSpec, coord_bound: int) -> list[HeegnerClass]:
    """Reduced classes [tau_lambda] found in the box with their multiplicity counts."""
    classes: dict[FieldElem, HeegnerClass] = {}
    for h in enumerate_heegner(m, spec, coord_bound):
        r = reduce_point(h)
        cls = classes.get(r.tau)
        if cls is None:
            cls = classes[r.tau] = HeegnerClass(r.tau, r)
        cls.identified_count += 1
        cls.raw_count += 2
        cls.conductors.add(h.conductor)
    return sorted(classes.values(), key=lambda c: _tau_key(c.tau))


def reduced_taus(m: int, spec: FieldSpec, coord_bound: int) -> set[FieldElem]:
    return {c.tau for c in heegner_divisor(m, spec, coord_bound)}


def factor_point(l: int, k: int, a: int, spec: FieldSpec) -> HeegnerPoint:
    """The Heegner vector lambda = (a + k*zeta, l) whose point is (a + k*conj(zeta))/l."""
    if l == 0:
        raise CuspError("factor index l must be nonzero")
    return heegner_point(spec.elem(a, k), spec.elem(l, 0))


def tau_numeric(h: HeegnerPoint, prec: int = 128) -> mpmath.mpc:
    return h.tau.embed(prec)


def residual(h: HeegnerPoint, prec: int = 128) -> mpmath.mpc:
    """<z(tau_lambda), lambda> evaluated numerically."""
    with mpmath.workprec(prec):
        lam = LatticeVector.from_frame(h.l1, h.l2)
        return herm_numeric(z_of_tau(h.tau, h.l1.field, prec), lam.embed(prec))


def exact_residual(h: HeegnerPoint) -> FieldElem:
    """<z(tau_lambda), lambda> in exact arithmetic; zero for every Heegner point."""
    spec = h.l1.field
    return herm(LatticeVector(h.tau, -spec.delta_inv()), LatticeVector.from_frame(h.l1, h.l2))


def check_orthogonal(h: HeegnerPoint) -> bool:
    return orthogonal_tau(LatticeVector.from_frame(h.l1, h.l2)) == h.tau
