"""Weyl chamber models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..qfield import to_mpf

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Chamber:
    """Weyl chamber W(t_lo, t_hi) of index m; t_hi None stands for infinity."""
    m: int
    t_lo: int
    t_hi: Optional[int]

    @property
    def n(self) -> int:
        return -self.m

    @property
    def unbounded(self) -> bool:
        return self.t_hi is None

    def label(self) -> str:
        return f"W({self.t_lo},{'inf' if self.t_hi is None else self.t_hi})"

    def to_dict(self) -> dict:
        return {"m": self.m, "t_lo": self.t_lo, "t_hi": self.t_hi}


@dataclass(frozen=True)
class Wall:
    """Point lies on the wall t^2 * y2 = |m| * y1."""
    m: int
    t: int

    def to_dict(self) -> dict:
        return {"m": self.m, "wall": self.t}


@dataclass(frozen=True)
class WeylVector:
    """rho = rho1*e3 + rho2*e4."""
    rho1: Fraction
    rho2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "rho1", Fraction(self.rho1))
        object.__setattr__(self, "rho2", Fraction(self.rho2))

    def __add__(self, other: WeylVector) -> WeylVector:
        return WeylVector(self.rho1 + other.rho1, self.rho2 + other.rho2)

    def __sub__(self, other: WeylVector) -> WeylVector:
        return WeylVector(self.rho1 - other.rho1, self.rho2 - other.rho2)

    def __rmul__(self, c: Rational) -> WeylVector:
        return WeylVector(c * self.rho1, c * self.rho2)

    def swapped(self) -> WeylVector:
        return WeylVector(self.rho2, self.rho1)

    def pair(self, y1, y2):
        """B(Y, rho) = y1*rho2 + y2*rho1."""
        if all(isinstance(y, (int, Fraction)) for y in (y1, y2)):
            return y1 * self.rho2 + y2 * self.rho1
        return y1 * to_mpf(self.rho2) + y2 * to_mpf(self.rho1)
