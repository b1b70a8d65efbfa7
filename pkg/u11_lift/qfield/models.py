"""Field models."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

Rational = Union[int, Fraction]


def to_mpf(x: Rational) -> mpmath.mpf:
    """Rational to mpf at the working precision."""
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


@dataclass(frozen=True)
class FieldSpec:
    """Imaginary quadratic field F = Q(sqrt(d)) in the zeta-basis."""
    d: int
    disc: int

    @property
    def odd(self) -> bool:
        return self.disc % 2 == 1

    @property
    def trace_zeta(self) -> int:
        return 1 if self.odd else 0

    @property
    def norm_zeta(self) -> int:
        # zeta is a root of x^2 - tr(zeta) x + N(zeta)
        return (1 - self.disc) // 4 if self.odd else -self.disc // 4

    def elem(self, a: Rational = 0, b: Rational = 0) -> FieldElem:
        return FieldElem(self, Fraction(a), Fraction(b))

    def zero(self) -> FieldElem:
        return self.elem(0, 0)

    def one(self) -> FieldElem:
        return self.elem(1, 0)

    def zeta(self) -> FieldElem:
        return self.elem(0, 1)

    def delta(self) -> FieldElem:
        """The element sqrt(D_F) with positive imaginary part, 2*zeta - tr(zeta)."""
        return self.elem(-self.trace_zeta, 2)

    def delta_inv(self) -> FieldElem:
        return self.delta() * Fraction(1, self.disc)

    def abs_delta(self, prec: int = 53) -> mpmath.mpf:
        with mpmath.workprec(prec):
            return +mpmath.sqrt(abs(self.disc))

    def zeta_numeric(self, prec: int = 53) -> mpmath.mpc:
        with mpmath.workprec(prec):
            return mpmath.mpc(mpmath.mpf(self.trace_zeta) / 2, mpmath.sqrt(abs(self.disc)) / 2)


@dataclass(frozen=True)
class FieldElem:
    """Exact element a + b*zeta of F with rational coordinates."""
    field: FieldSpec
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __repr__(self) -> str:
        return f"FieldElem(d={self.field.d}, a={self.a}, b={self.b})"

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}ζ"

    def _coerce(self, other) -> FieldElem | None:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError(f"elements of different fields: d={self.field.d}, d={other.field.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, Fraction(other), Fraction(0))
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, FieldElem):
            return self.field == other.field and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.d, self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> FieldElem:
        return FieldElem(self.field, -self.a, -self.b)

    def __add__(self, other) -> FieldElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.field, self.a + other.a, self.b + other.b)

    def __radd__(self, other) -> FieldElem:
        return self + other

    def __sub__(self, other) -> FieldElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> FieldElem:
        return (-self) + other

    def __mul__(self, other) -> FieldElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t, n = self.field.trace_zeta, self.field.norm_zeta
        bb = self.b * other.b
        return FieldElem(
            self.field,
            self.a * other.a - n * bb,
            self.a * other.b + self.b * other.a + t * bb,
        )

    def __rmul__(self, other) -> FieldElem:
        return self * other

    def __truediv__(self, other) -> FieldElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in F")
        return (self * other.conj()).scale(1 / n)

    def __rtruediv__(self, other) -> FieldElem:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int) -> FieldElem:
        if e < 0:
            return self.field.one() / (self ** -e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, r: Rational) -> FieldElem:
        return FieldElem(self.field, self.a * r, self.b * r)

    def conj(self) -> FieldElem:
        return FieldElem(self.field, self.a + self.field.trace_zeta * self.b, -self.b)

    def norm(self) -> Fraction:
        f = self.field
        return self.a * self.a + f.trace_zeta * self.a * self.b + f.norm_zeta * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a + self.field.trace_zeta * self.b

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def real_part(self) -> Fraction:
        return self.a + Fraction(self.field.trace_zeta, 2) * self.b

    def imag_over_abs_delta(self) -> Fraction:
        """Im(e) / |delta|, exact; Im(zeta) = |delta|/2."""
        return self.b / 2

    def embed(self, prec: int = 53) -> mpmath.mpc:
        with mpmath.workprec(prec):
            return to_mpf(self.a) + to_mpf(self.b) * self.field.zeta_numeric(prec)
