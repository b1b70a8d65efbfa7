"""Hermitian lattice L = O_F + D_F^-1 and the coordinate maps into H x H."""

from fractions import Fraction
from typing import Optional

import mpmath
from sympy import Matrix, Rational

from ..errors import InvalidInputError
from ..qfield import FieldElem, FieldSpec, as_mpc
from .models import LatticeVector, TubePoint

Pair = tuple[mpmath.mpc, mpmath.mpc]


def herm(x: LatticeVector, y: LatticeVector) -> FieldElem:
    """<x, y> = x1*conj(y2) + x2*conj(y1)."""
    return x.x1 * y.x2.conj() + x.x2 * y.x1.conj()


def bilinear(x: LatticeVector, y: LatticeVector) -> Fraction:
    return herm(x, y).trace()


def qform(x: LatticeVector) -> Fraction:
    value = herm(x, x)
    if not value.is_rational():
        raise ArithmeticError(f"<x,x> is not rational: {value}")
    return value.a


def ell(spec: FieldSpec) -> LatticeVector:
    return LatticeVector(spec.one(), spec.zero())


def ell_prime(spec: FieldSpec) -> LatticeVector:
    return LatticeVector(spec.zero(), -spec.delta_inv())


def ebasis(spec: FieldSpec) -> tuple[LatticeVector, LatticeVector, LatticeVector, LatticeVector]:
    """The basis e1..e4 spanning two hyperbolic planes."""
    l, lp = ell(spec), ell_prime(spec)
    scale = spec.one() / (spec.delta() * herm(lp, l))
    zeta = spec.zeta()
    e1 = l
    e2 = (zeta * scale) * lp
    e3 = (-zeta) * l
    e4 = scale * lp
    return e1, e2, e3, e4


def lorentz_vector(l: int, k: int, spec: FieldSpec) -> LatticeVector:
    """l*e3 + k*e4, a vector of the sublattice K with Q = l*k."""
    _, _, e3, e4 = ebasis(spec)
    return l * e3 + k * e4


def standard_generators(spec: FieldSpec) -> list[LatticeVector]:
    zeta, dinv, zero = spec.zeta(), spec.delta_inv(), spec.zero()
    return [
        LatticeVector(spec.one(), zero),
        LatticeVector(zeta, zero),
        LatticeVector(zero, dinv),
        LatticeVector(zero, zeta * dinv),
    ]


def gram_matrix(vectors: list[LatticeVector]) -> list[list[Fraction]]:
    return [[bilinear(v, w) for w in vectors] for v in vectors]


def is_unimodular(spec: FieldSpec) -> bool:
    """L equals its dual: the trace-form Gram matrix of a Z-basis has det +-1."""
    gram = gram_matrix(standard_generators(spec))
    det = Matrix([[Rational(g.numerator, g.denominator) for g in row] for row in gram]).det()
    return det in (1, -1)


def orthogonal_tau(x: LatticeVector) -> Optional[FieldElem]:
    """The tau in H with <z(tau), x> = 0, or None if there is none."""
    l1, l2 = x.l1, x.l2
    if not l2:
        return None
    tau = (l1 / l2).conj()
    return tau if tau.b > 0 else None


def scalar_action(mu, v: Pair) -> Pair:
    """mu^ acting on ambient coordinates by complex multiplication."""
    return mu * v[0], mu * v[1]


def herm_numeric(v: Pair, w: Pair) -> mpmath.mpc:
    return v[0] * mpmath.conj(w[1]) + v[1] * mpmath.conj(w[0])


def real_bilinear(v: Pair, w: Pair) -> mpmath.mpf:
    return 2 * herm_numeric(v, w).real


def _check_upper(tau: mpmath.mpc) -> None:
    if tau.imag <= 0:
        raise InvalidInputError(f"tau must lie in the upper half-plane, got Im(tau) = {tau.imag}")


def z_of_tau(tau, spec: FieldSpec, precision: int = 128) -> Pair:
    """z(tau) = ell' + tau*ell in ambient coordinates."""
    with mpmath.workprec(precision):
        t = as_mpc(tau, precision)
        _check_upper(t)
        return t, (-spec.delta_inv()).embed(precision)


def embed_tau(tau, spec: FieldSpec, precision: int = 128) -> TubePoint:
    """tau -> Z = (tau, -conj(zeta))."""
    with mpmath.workprec(precision):
        t = as_mpc(tau, precision)
        _check_upper(t)
        return TubePoint(t, (-spec.zeta().conj()).embed(precision))


def Y_of_tau(tau, spec: FieldSpec, precision: int = 128) -> tuple[mpmath.mpf, mpmath.mpf]:
    with mpmath.workprec(precision):
        t = as_mpc(tau, precision)
        _check_upper(t)
        return t.imag, spec.abs_delta(precision) / 2


def ZL_of_Z(Z: TubePoint) -> tuple[mpmath.mpc, mpmath.mpc, mpmath.mpc, mpmath.mpc]:
    """Coordinates (-z1*z2, 1, z1, z2) of Z_L in the basis e1..e4."""
    return -Z.z1 * Z.z2, mpmath.mpc(1), Z.z1, Z.z2


def complex_bilinear(u, w) -> mpmath.mpc:
    """C-bilinear form on e-basis coordinates; Gram matrix is two hyperbolic planes."""
    return u[0] * w[1] + u[1] * w[0] + u[2] * w[3] + u[3] * w[2]


def split_ZL(Z: TubePoint, spec: FieldSpec, precision: int = 128) -> tuple[Pair, Pair]:
    """Real and imaginary parts X_L, Y_L of Z_L, as ambient vectors."""
    with mpmath.workprec(precision):
        basis = [e.embed(precision) for e in ebasis(spec)]
        coords = ZL_of_Z(Z)

        def combine(parts):
            first = sum((c * e[0] for c, e in zip(parts, basis)), mpmath.mpc(0))
            second = sum((c * e[1] for c, e in zip(parts, basis)), mpmath.mpc(0))
            return first, second

        return combine([c.real for c in coords]), combine([c.imag for c in coords])
