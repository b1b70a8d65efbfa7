"""Lattice models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import mpmath

from ..errors import InvalidInputError
from ..qfield import FieldElem, FieldSpec, in_inv_different, in_OF

Scalar = Union[int, FieldElem]


@dataclass(frozen=True)
class LatticeVector:
    """Vector of O_F + D_F^-1 in ambient coordinates (x1, x2)."""
    x1: FieldElem
    x2: FieldElem

    @property
    def field(self) -> FieldSpec:
        return self.x1.field

    @property
    def l1(self) -> FieldElem:
        return self.x1

    @property
    def l2(self) -> FieldElem:
        return -(self.field.delta() * self.x2)

    @classmethod
    def from_frame(cls, l1: FieldElem, l2: FieldElem) -> LatticeVector:
        """Vector l1*ell + l2*ell' with ell = (1, 0), ell' = (0, -1/delta)."""
        return cls(l1, -(l2 * l1.field.delta_inv()))

    def is_lattice(self) -> bool:
        return in_OF(self.x1) and in_inv_different(self.x2)

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x1 - other.x1, self.x2 - other.x2)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x1, -self.x2)

    def __rmul__(self, mu: Scalar) -> LatticeVector:
        """Complex scalar action mu^ on ambient coordinates."""
        if not isinstance(mu, (int, FieldElem)):
            return NotImplemented
        return LatticeVector(mu * self.x1, mu * self.x2)

    def embed(self, prec: int = 53) -> tuple[mpmath.mpc, mpmath.mpc]:
        return self.x1.embed(prec), self.x2.embed(prec)


@dataclass(frozen=True)
class TubePoint:
    """Point (z1, z2) of H x H in (e3, e4) coordinates."""
    z1: mpmath.mpc
    z2: mpmath.mpc

    def __post_init__(self):
        for name in ("z1", "z2"):
            if not isinstance(getattr(self, name), mpmath.mpc):
                object.__setattr__(self, name, mpmath.mpc(getattr(self, name)))
        if self.z1.imag <= 0 or self.z2.imag <= 0:
            raise InvalidInputError("tube point needs Im z1 > 0 and Im z2 > 0")

    @property
    def Y(self) -> tuple[mpmath.mpf, mpmath.mpf]:
        return self.z1.imag, self.z2.imag
