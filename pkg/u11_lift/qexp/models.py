"""q-series models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import InsufficientPrecisionError


@dataclass(frozen=True)
class QSeries:
    """Laurent series sum c(m) q^m with exact integer coefficients.

    coeffs[i] is the coefficient of q^(valuation + i); exponents >= prec are unknown.
    """
    valuation: int
    coeffs: tuple[int, ...]
    prec: int

    @classmethod
    def make(cls, valuation: int, coeffs, prec: int) -> QSeries:
        coeffs = list(coeffs)[: max(prec - valuation, 0)]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            valuation += 1
        if not coeffs:
            return cls(prec, (), prec)
        coeffs.extend([0] * (prec - valuation - len(coeffs)))
        return cls(valuation, tuple(coeffs), prec)

    @classmethod
    def constant(cls, c: int, prec: int) -> QSeries:
        return cls.make(0, [c], prec)

    @classmethod
    def monomial(cls, c: int, e: int, prec: int) -> QSeries:
        return cls.make(e, [c], prec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        terms = [f"{c}*q^{self.valuation + i}" for i, c in enumerate(self.coeffs[:6]) if c]
        return f"QSeries({' + '.join(terms) or '0'} + O(q^{self.prec}))"

    def coeff(self, m: int) -> int:
        if m >= self.prec:
            raise InsufficientPrecisionError(f"coefficient of q^{m} requested, series known below q^{self.prec}")
        if m < self.valuation:
            return 0
        return self.coeffs[m - self.valuation]

    def items(self):
        """(exponent, coefficient) pairs with nonzero coefficient."""
        return [(self.valuation + i, c) for i, c in enumerate(self.coeffs) if c]

    def truncate(self, N: int) -> QSeries:
        return QSeries.make(self.valuation, self.coeffs, min(self.prec, N))

    def shift(self, k: int) -> QSeries:
        """Multiply by q^k."""
        return QSeries(self.valuation + k, self.coeffs, self.prec + k) if self.coeffs else QSeries(self.prec + k, (), self.prec + k)

    def _raw(self, m: int) -> int:
        i = m - self.valuation
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __neg__(self) -> QSeries:
        return QSeries(self.valuation, tuple(-c for c in self.coeffs), self.prec)

    def __add__(self, other: Union[QSeries, int]) -> QSeries:
        if isinstance(other, int):
            other = QSeries.constant(other, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        prec = min(self.prec, other.prec)
        low = min(self.valuation, other.valuation)
        return QSeries.make(low, [self._raw(e) + other._raw(e) for e in range(low, prec)], prec)

    def __radd__(self, other: int) -> QSeries:
        return self + other

    def __sub__(self, other: Union[QSeries, int]) -> QSeries:
        if isinstance(other, (int, QSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: int) -> QSeries:
        return (-self) + other

    def __mul__(self, other: Union[QSeries, int]) -> QSeries:
        if isinstance(other, int):
            return QSeries.make(self.valuation, [other * c for c in self.coeffs], self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        valuation = self.valuation + other.valuation
        prec = min(self.valuation + other.prec, other.valuation + self.prec)
        length = prec - valuation
        if length <= 0:
            return QSeries(prec, (), prec)
        out = [0] * length
        right = other.coeffs
        for i, a in enumerate(self.coeffs[:length]):
            if not a:
                continue
            for j in range(min(len(right), length - i)):
                out[i + j] += a * right[j]
        return QSeries.make(valuation, out, prec)

    def __rmul__(self, other: int) -> QSeries:
        return self * other

    def __pow__(self, n: int) -> QSeries:
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.constant(1, self.prec - self.valuation)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self) -> QSeries:
        """1/f for f = q^v * u with leading coefficient +-1."""
        if self.is_zero():
            raise ArithmeticError("cannot invert a series that vanishes to its precision")
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise ArithmeticError(f"leading coefficient {lead} is not a unit")
        u = self.coeffs
        length = len(u)
        out = [0] * length
        out[0] = lead
        for k in range(1, length):
            s = sum(u[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -lead * s
        return QSeries.make(-self.valuation, out, -self.valuation + length)

    def __truediv__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.invert()
