"""Heegner point models."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from ..qfield import FieldElem


@dataclass(frozen=True)
class HeegnerPoint:
    """CM point tau_lambda of the vector lambda = l1*ell + l2*ell' of norm m < 0.

    tau is the root in H of A*tau^2 + B*tau + C; q is the content gcd(A, B, C).
    """
    l1: FieldElem
    l2: FieldElem
    m: int
    A: int
    B: int
    C: int
    q: int
    conductor: int
    tau: FieldElem

    @property
    def primitive_form(self) -> tuple[int, int, int]:
        return self.A // self.q, self.B // self.q, self.C // self.q

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def coordinates(self) -> tuple[int, int, int, int]:
        """(a, b, c, e) with l1 = a + b*zeta and l2 = c + e*zeta."""
        return (int(self.l1.a), int(self.l1.b), int(self.l2.a), int(self.l2.b))

    def sort_key(self) -> tuple:
        return (*self.primitive_form, *self.coordinates)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.coordinates),
            "m": self.m,
            "minpoly": [self.A, self.B, self.C],
            "q": self.q,
            "conductor": self.conductor,
        }


@dataclass
class HeegnerClass:
    """One reduced point of H(m) with the vectors found for it in the search box."""
    tau: FieldElem
    representative: HeegnerPoint
    raw_count: int = 0
    identified_count: int = 0
    conductors: set[int] = field(default_factory=set)


def content(A: int, B: int, C: int) -> int:
    return gcd(gcd(abs(A), abs(B)), abs(C))
