"""Eisenstein series, the discriminant, j and the Faber basis j_n of weight 0."""

import logging
from functools import lru_cache

import mpmath
from sympy import divisor_sigma

from ..errors import InvalidInputError
from ..qfield import as_mpc
from .models import QSeries

logger = logging.getLogger(__name__)

J_CONSTANT = 744


def sigma(n: int) -> int:
    if n < 1:
        raise InvalidInputError(f"sigma needs n >= 1, got {n}")
    return int(divisor_sigma(n))


def sigma3(n: int) -> int:
    if n < 1:
        raise InvalidInputError(f"sigma3 needs n >= 1, got {n}")
    return int(divisor_sigma(n, 3))


def coeff(f: QSeries, m: int) -> int:
    return f.coeff(m)


def _check_length(N: int) -> None:
    if N < 2:
        raise InvalidInputError(f"series precision must be at least 2, got {N}")


def euler_product(N: int) -> QSeries:
    """prod_{m>=1} (1 - q^m) to O(q^N)."""
    out = [0] * N
    out[0] = 1
    for m in range(1, N):
        for e in range(N - 1, m - 1, -1):
            out[e] -= out[e - m]
    return QSeries.make(0, out, N)


@lru_cache(maxsize=32)
def delta_series(N: int) -> QSeries:
    _check_length(N)
    return (euler_product(N - 1) ** 24).shift(1)


@lru_cache(maxsize=32)
def e4_series(N: int) -> QSeries:
    _check_length(N)
    return QSeries.make(0, [1] + [240 * sigma3(n) for n in range(1, N)], N)


@lru_cache(maxsize=32)
def e6_series(N: int) -> QSeries:
    _check_length(N)
    return QSeries.make(0, [1] + [-504 * int(divisor_sigma(n, 5)) for n in range(1, N)], N)


@lru_cache(maxsize=32)
def j_series(N: int) -> QSeries:
    """j = E4^3 / Delta to O(q^N)."""
    _check_length(N)
    return (e4_series(N + 1) ** 3 / delta_series(N + 2)).truncate(N)


def j_series_from_e6(N: int) -> QSeries:
    """j = E6^2 / Delta + 1728, independent of the E4 construction."""
    _check_length(N)
    return (e6_series(N + 1) ** 2 / delta_series(N + 2)).truncate(N) + 1728


@lru_cache(maxsize=16)
def faber_basis(n_max: int, N: int) -> tuple[QSeries, ...]:
    """j_1, ..., j_{n_max}, each q^-n + O(q) and known below q^N.

    j_n is reduced from j_1^n by subtracting multiples of j_k (k < n) and a constant.
    """
    if n_max < 1 or N < 1:
        raise InvalidInputError(f"faber basis needs n >= 1 and N >= 1, got n={n_max}, N={N}")
    work = N + n_max - 1
    j1 = j_series(max(work, 2)).truncate(work) - J_CONSTANT
    basis: list[QSeries] = []
    power = None
    for n in range(1, n_max + 1):
        power = j1 if power is None else power * j1
        f = power
        for k in range(n - 1, 0, -1):
            c = f.coeff(-k)
            if c:
                f = f - c * basis[k - 1]
        f = f - f.coeff(0)
        assert f.valuation == -n and f.coeff(-n) == 1
        basis.append(f)
    logger.debug("built faber basis n_max=%d to O(q^%d)", n_max, N)
    return tuple(b.truncate(N) for b in basis)


def faber_jn(n: int, N: int) -> QSeries:
    """The unique weight-0 form q^-n + O(q) with constant term 0."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return faber_basis(n, N)[n - 1]


def poincare_constant(m: int) -> int:
    """Constant term b_m(0, 1) = 24*sigma(|m|) of F_m(., 1)."""
    if m >= 0:
        raise InvalidInputError(f"m must be negative, got {m}")
    return 24 * sigma(-m)


def poincare_series(m: int, N: int) -> QSeries:
    """q-expansion of F_m(., 1) = j_|m| + 24*sigma(|m|)."""
    return faber_jn(-m, N) + poincare_constant(m)


def principal_part(f: QSeries) -> dict[int, int]:
    return {m: c for m, c in f.items() if m < 0}


def form_from_principal(principal: dict[int, int], c0: int, N: int) -> QSeries:
    """sum c(m) j_|m| + c0, the weakly holomorphic form with this principal part."""
    if any(m >= 0 for m in principal):
        raise InvalidInputError("principal part indices must be negative")
    f = QSeries.constant(c0, N)
    active = {m: c for m, c in principal.items() if c}
    if active:
        basis = faber_basis(max(-m for m in active), N)
        for m, c in sorted(active.items()):
            f = f + c * basis[-m - 1]
    return f


def is_weakly_holomorphic(f: QSeries) -> bool:
    """True iff f matches the form reconstructed from its principal part and constant term."""
    if f.prec <= 0:
        return False
    rebuilt = form_from_principal(principal_part(f), f.coeff(0), f.prec)
    return all(f.coeff(e) == rebuilt.coeff(e) for e in range(min(f.valuation, 0), f.prec))


def evaluate(f: QSeries, tau, prec_bits: int = 128) -> mpmath.mpc:
    """Numeric value of the truncated series at tau."""
    with mpmath.workprec(prec_bits):
        t = as_mpc(tau, prec_bits)
        if t.imag <= 0:
            raise InvalidInputError("tau must lie in the upper half-plane")
        q = mpmath.exp(2j * mpmath.pi * t)
        total = mpmath.mpc(0)
        for e, c in f.items():
            total += c * q ** e
        return total
