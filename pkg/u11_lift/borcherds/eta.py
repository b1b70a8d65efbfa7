"""Dedekind eta and the products attached to the constant form f = 1."""

import logging
from fractions import Fraction
from typing import Optional

import mpmath

from ..errors import InvalidInputError
from ..qfield import FieldSpec, as_mpc
from ..weyl import CONSTANT_WEYL_VECTOR
from .models import EvalResult, ProductParams

logger = logging.getLogger(__name__)


def _upper(tau, prec: int) -> mpmath.mpc:
    t = as_mpc(tau, prec)
    if t.imag <= 0:
        raise InvalidInputError(f"point must lie in the upper half-plane, got Im = {mpmath.nstr(t.imag, 8)}")
    return t


def eta_terms(tau, prec_bits: int = 128) -> int:
    """Number of factors after which |q|^(terms+1) < 2^-prec_bits."""
    with mpmath.workprec(prec_bits):
        t = _upper(tau, prec_bits)
        return int(mpmath.ceil(prec_bits * mpmath.log(2) / (2 * mpmath.pi * t.imag)))


def _eta_log(t: mpmath.mpc, terms: int) -> tuple[mpmath.mpc, mpmath.mpf]:
    """log eta(t) truncated after `terms` factors, and the bound on the omitted logs."""
    q = mpmath.expjpi(2 * t)
    logs = [2j * mpmath.pi * t / 24]
    qm = q
    for _ in range(terms):
        logs.append(mpmath.log1p(-qm))
        qm *= q
    r = abs(q)
    tail = r ** (terms + 1) / ((1 - r) * (1 - r ** (terms + 1)))
    return mpmath.fsum(logs), tail


def eta(tau, terms: Optional[int] = None, prec_bits: int = 128) -> mpmath.mpc:
    """eta(tau) = e(tau/24) * prod_{m>=1} (1 - e(m tau)), truncated after `terms` factors."""
    with mpmath.workprec(prec_bits):
        t = _upper(tau, prec_bits)
        if terms is None:
            terms = eta_terms(t, prec_bits)
        total, _ = _eta_log(t, terms)
        return mpmath.exp(total)


def minus_conj_zeta(spec: FieldSpec, prec_bits: int = 128) -> mpmath.mpc:
    """-conj(zeta), the second coordinate of the embedded point; it lies in H."""
    with mpmath.workprec(prec_bits):
        return -mpmath.conj(spec.zeta_numeric(prec_bits))


def _eta_product(points, params: ProductParams) -> EvalResult:
    prec = params.prec_bits
    with mpmath.workprec(prec + 16):
        logs, tails, count = [], [], 0
        for z in points:
            t = _upper(z, prec)
            terms = eta_terms(t, prec)
            total, tail = _eta_log(t, terms)
            logs.append(total)
            tails.append(tail)
            count += terms
        log_value = mpmath.fsum(logs)
        value = mpmath.exp(log_value)
    logger.debug("eta product over %d points, %d factors", len(points), count)
    return EvalResult(
        value=value,
        log_abs=log_value.real,
        factor_count=count,
        tail_bound=mpmath.fsum(tails),
        weight=Fraction(len(points), 2),
        prec_bits=prec,
    )


def xi_const(tau, spec: FieldSpec, params: ProductParams = ProductParams()) -> EvalResult:
    """Xi(tau; 1) = eta(tau) * eta(-conj(zeta)), of weight 1/2."""
    result = _eta_product([tau, minus_conj_zeta(spec, params.prec_bits)], params)
    result.weight = Fraction(1, 2)
    result.weyl = CONSTANT_WEYL_VECTOR
    return result


def psi_const(z1, z2, params: ProductParams = ProductParams()) -> mpmath.mpc:
    """Psi_L(z1, z2; 1) = eta(z1) * eta(z2)."""
    return _eta_product([z1, z2], params).value
