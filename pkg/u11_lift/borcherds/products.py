"""Borcherds products Xi(tau; f, W) of the embedded point Z = (tau, -conj(zeta)).

The factor of lambda = l*e3 + k*e4 is (1 - e(k*tau - l*conj(zeta)))^c(l*k); it is
kept in the chamber W iff l*y2 + k*y1 > 0 on all of W, i.e. |m|*l + k*t^2 >= 0 for
both bounding divisors t of W (k >= 0 for the unbounded side).
"""

import logging
from fractions import Fraction
from typing import Optional

import mpmath

from ..errors import ConvergenceError, DivisorHitError, InvalidInputError, WallError
from ..hermlattice import Y_of_tau
from ..qexp import QSeries, faber_jn, form_from_principal, is_weakly_holomorphic, principal_part
from ..qfield import FieldSpec, as_mpc, to_mpf
from ..weyl import (
    Chamber,
    Wall,
    WeylVector,
    chamber_of_Y,
    chambers_for_f,
    check_chamber,
    divisors,
    weyl_vector_f,
    weyl_vector_jn,
)
from .models import EvalResult, ProductParams

logger = logging.getLogger(__name__)

Factor = tuple[int, int, int]


def is_retained(l: int, k: int, W: Chamber) -> bool:
    """(lambda, Y) > 0 on W for lambda = l*e3 + k*e4."""
    if l == 0 and k == 0:
        return False
    n = W.n
    if n * l + k * W.t_lo ** 2 < 0:
        return False
    if W.t_hi is None:
        return k >= 0
    return n * l + k * W.t_hi ** 2 >= 0


def _negative_pairs(N: int) -> list[tuple[int, int]]:
    """All (l, k) with l*k = N < 0."""
    out = []
    for s in divisors(-N):
        out.append((s, N // s))
        out.append((-s, -N // s))
    return out


def retained_pairs(n: int, W: Chamber, max_kl: int) -> list[tuple[int, int]]:
    """Factor indices (l, k) of Xi(j_n; W) with l*k in {-n} and 1..max_kl."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    check_chamber(-n, W)
    pairs = [(l, k) for l, k in _negative_pairs(-n) if is_retained(l, k, W)]
    for N in range(1, max_kl + 1):
        pairs.extend((l, N // l) for l in divisors(N))
    return pairs


def convergence_threshold(n: int, spec: FieldSpec, region: str = "conservative",
                          prec: int = 128) -> mpmath.mpf:
    """Lower bound on Im(tau) enforced before evaluating a product of index n."""
    with mpmath.workprec(prec):
        if region == "conservative":
            return mpmath.mpf(2 * n)
        if region == "theorem":
            return 2 * n / spec.abs_delta(prec)
        raise InvalidInputError(f"unknown region {region!r}")


def check_region(t: mpmath.mpc, n: int, spec: FieldSpec, params: ProductParams) -> None:
    threshold = convergence_threshold(n, spec, params.region, params.prec_bits)
    if t.imag <= threshold:
        raise ConvergenceError(
            f"Im(tau) = {mpmath.nstr(t.imag, 10)} is not above {mpmath.nstr(threshold, 10)} "
            f"({params.region} region for index {n})"
        )


def growth_constant(coeffs: dict[int, int], n: int, max_kl: int) -> mpmath.mpf:
    """kappa with |c(N)| <= kappa * exp(4 pi sqrt(n N)): twice the largest ratio seen up to max_kl."""
    best = mpmath.mpf(0)
    for N in range(1, max_kl + 1):
        c = coeffs.get(N, 0)
        if c:
            best = max(best, abs(c) * mpmath.exp(-4 * mpmath.pi * mpmath.sqrt(n * N)))
    return 2 * best


def tail_bound(kappa: mpmath.mpf, n: int, y1, y2, max_kl: int, tail_margin: float = 0.0,
               max_explicit: int = 200000) -> mpmath.mpf:
    """Bound on |sum_{N > max_kl} c(N) sum_{l*k = N} log(1 - w)| for the omitted factors.

    Uses |w| <= exp(-4 pi sqrt(N y1 y2)) and at most 2 sqrt(N) pairs per N.
    """
    if kappa == 0:
        return mpmath.mpf(0)
    alpha = 4 * mpmath.pi * (mpmath.sqrt(y1 * y2) - mpmath.sqrt(n))
    if alpha <= tail_margin:
        raise ConvergenceError(
            f"coefficient growth exp(4 pi sqrt({n} N)) is not dominated at y1*y2 = {mpmath.nstr(y1 * y2, 10)}"
        )
    q0 = mpmath.exp(-4 * mpmath.pi * mpmath.sqrt((max_kl + 1) * y1 * y2))
    # 2 sqrt(x) exp(-alpha sqrt(x)) decreases for sqrt(x) > 1/alpha
    L = max(max_kl, int(mpmath.ceil(1 / alpha ** 2)) + 1)
    if L - max_kl > max_explicit:
        raise ConvergenceError("tail bound needs too many explicit terms; move tau further from the boundary")
    terms = [2 * mpmath.sqrt(N) * mpmath.exp(-alpha * mpmath.sqrt(N)) for N in range(max_kl + 1, L + 1)]
    U = mpmath.sqrt(L)
    integral = 4 * mpmath.exp(-alpha * U) * (U ** 2 / alpha + 2 * U / alpha ** 2 + 2 / alpha ** 3)
    return kappa * (mpmath.fsum(terms) + integral) / (1 - q0)


def _accumulate(factors: list[Factor], t: mpmath.mpc, spec: FieldSpec, weyl: WeylVector,
                prec: int) -> tuple[mpmath.mpc, mpmath.mpf]:
    """log of e((rho, Z)) * prod (1 - e(k tau - l conj(zeta)))^c, and the largest |w|."""
    zbar = mpmath.conj(spec.zeta_numeric(prec))
    two_pi_i = 2j * mpmath.pi
    logs = [two_pi_i * (to_mpf(weyl.rho2) * t - to_mpf(weyl.rho1) * zbar)]
    eps = mpmath.ldexp(1, -(prec - 8))
    largest = mpmath.mpf(0)
    for l, k, c in factors:
        x = k * t - l * zbar
        w = mpmath.exp(two_pi_i * x)
        if abs(1 - w) < eps:
            raise DivisorHitError(l, k, int(mpmath.nint(x.real)))
        largest = max(largest, abs(w))
        logs.append(c * mpmath.log1p(-w))
    return mpmath.fsum(logs), largest


def _finish(log_value, largest, factors, tail, weight, weyl, outside, params) -> EvalResult:
    return EvalResult(
        value=mpmath.exp(log_value),
        log_abs=log_value.real,
        factor_count=len(factors),
        tail_bound=tail,
        weight=weight,
        weyl=weyl,
        max_factor_modulus=largest,
        outside_chamber=outside,
        prec_bits=params.prec_bits,
    )


def _locate(m: int, W: Chamber, Y, params: ProductParams) -> bool:
    """True when Y is outside W; raises instead when chamber_check is set."""
    found = chamber_of_Y(m, Y)
    if found == W:
        return False
    if params.chamber_check:
        if isinstance(found, Wall):
            raise WallError(found.m, found.t)
        raise InvalidInputError(f"Y lies in {found.label()}, not in {W.label()}")
    return True


def xi_jn(tau, n: int, W: Chamber, spec: FieldSpec, params: ProductParams = ProductParams()) -> EvalResult:
    """Xi(tau; j_n, W), the product expansion of the lift of j_n adapted to W."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    check_chamber(-n, W)
    if params.max_kl < n:
        raise InvalidInputError(f"max_kl = {params.max_kl} must be >= n = {n}")
    prec = params.prec_bits
    with mpmath.workprec(prec + 16):
        t = as_mpc(tau, prec)
        if t.imag <= 0:
            raise InvalidInputError("tau must lie in the upper half-plane")
        check_region(t, n, spec, params)
        y1, y2 = Y_of_tau(t, spec, prec)
        outside = _locate(-n, W, (y1, y2), params)

        jn = faber_jn(n, params.max_kl + 1)
        coeffs = {N: jn.coeff(N) for N in range(-n, params.max_kl + 1)}
        factors = [(l, k, coeffs[l * k]) for l, k in retained_pairs(n, W, params.max_kl) if coeffs[l * k]]
        weyl = weyl_vector_jn(n, W)
        log_value, largest = _accumulate(factors, t, spec, weyl, prec)
        if not outside and largest >= 1:
            raise ConvergenceError(f"retained factor with |e((lambda, Z))| = {mpmath.nstr(largest, 8)} >= 1")
        tail = tail_bound(growth_constant(coeffs, n, params.max_kl), n, y1, y2, params.max_kl, params.tail_margin)
    logger.debug("xi_jn n=%d %s: %d factors, tail %s", n, W.label(), len(factors), mpmath.nstr(tail, 5))
    return _finish(log_value, largest, factors, tail, Fraction(0), weyl, outside, params)


def _zero_families(t: mpmath.mpc, spec: FieldSpec, c0: int, prec: int) -> tuple[list[Factor], mpmath.mpf]:
    """Factors (l, 0) and (0, k) of weight c0, cut once |w| < 2^-prec, with their tail bound."""
    factors: list[Factor] = []
    tail = mpmath.mpf(0)
    if not c0:
        return factors, tail
    cutoff = mpmath.ldexp(1, -prec)
    zbar_im = -spec.zeta_numeric(prec).imag
    for r, make in ((-zbar_im, lambda j: (j, 0)), (t.imag, lambda j: (0, j))):
        q = mpmath.exp(-2 * mpmath.pi * r)
        j, qj = 1, q
        while qj >= cutoff:
            factors.append((*make(j), c0))
            j += 1
            qj *= q
        tail += abs(c0) * qj / (1 - q) ** 2
    return factors, tail


def _coefficients(f: QSeries, max_kl: int) -> tuple[dict[int, int], int]:
    if not is_weakly_holomorphic(f):
        raise InvalidInputError("f is not a weakly holomorphic form of weight 0 (coefficients do not match its principal part)")
    principal = principal_part(f)
    c0 = f.coeff(0)
    full = form_from_principal(principal, c0, max_kl + 1)
    return {N: full.coeff(N) for N in range(min(principal, default=0), max_kl + 1)}, c0


def xi_f(tau, f: QSeries, spec: FieldSpec, Y=None, params: ProductParams = ProductParams()) -> EvalResult:
    """Xi(tau; f, W) for the chamber W containing Y (default: the Y of tau itself).

    The weight is c(0)/2.
    """
    coeffs, c0 = _coefficients(f, params.max_kl)
    principal = {m: c for m, c in coeffs.items() if m < 0 and c}
    index = max((-m for m in principal), default=0)
    if params.max_kl < index:
        raise InvalidInputError(f"max_kl = {params.max_kl} must be >= {index}")
    prec = params.prec_bits
    with mpmath.workprec(prec + 16):
        t = as_mpc(tau, prec)
        if t.imag <= 0:
            raise InvalidInputError("tau must lie in the upper half-plane")
        if index:
            check_region(t, index, spec, params)
        y1, y2 = Y_of_tau(t, spec, prec)
        Y = (y1, y2) if Y is None else Y
        chambers = chambers_for_f(principal, Y)
        outside = any(_locate(m, W, (y1, y2), params) for m, W in chambers.items())

        factors: list[Factor] = []
        for m, W in chambers.items():
            factors.extend((l, k, principal[m]) for l, k in _negative_pairs(m) if is_retained(l, k, W))
        for N in range(1, params.max_kl + 1):
            if coeffs.get(N):
                factors.extend((l, N // l, coeffs[N]) for l in divisors(N))
        zero_factors, zero_tail = _zero_families(t, spec, c0, prec)
        factors.extend(zero_factors)

        weyl = weyl_vector_f(principal, c0, Y)
        log_value, largest = _accumulate(factors, t, spec, weyl, prec)
        if not outside and largest >= 1:
            raise ConvergenceError(f"retained factor with |e((lambda, Z))| = {mpmath.nstr(largest, 8)} >= 1")
        tail = zero_tail
        if index:
            kappa = growth_constant(coeffs, index, params.max_kl)
            tail += tail_bound(kappa, index, y1, y2, params.max_kl, params.tail_margin)
    logger.debug("xi_f c0=%d principal=%s: %d factors", c0, principal, len(factors))
    return _finish(log_value, largest, factors, tail, Fraction(c0, 2), weyl, outside, params)


def factor_zero_vector(l: int, k: int, a: int) -> tuple[int, int, int]:
    """(l', k', a') with k' >= 1 such that factor (l, k) vanishes where k' tau - l' conj(zeta) = a'."""
    if k < 0:
        return -l, -k, -a
    return l, k, a


def xi(tau, spec: FieldSpec, n: Optional[int] = None, W: Optional[Chamber] = None,
       f: Optional[QSeries] = None, params: ProductParams = ProductParams()) -> EvalResult:
    """Dispatch to xi_jn (n and W given) or xi_f (f given)."""
    if f is not None:
        return xi_f(tau, f, spec, params=params)
    if n is None or W is None:
        raise InvalidInputError("need either f, or n together with a chamber")
    return xi_jn(tau, n, W, spec, params)
