"""Zero orders of Xi(j_n) by the argument principle, and log|Xi| sample grids."""

import logging
from fractions import Fraction

import mpmath

from ..errors import InconclusiveError, InvalidInputError
from ..qfield import FieldSpec, as_mpc, to_mpf
from ..weyl import Chamber
from .models import ProductParams
from .products import check_region, xi_jn

logger = logging.getLogger(__name__)

QUARTER_TURN = mpmath.pi / 2


def _circle_values(tau0: mpmath.mpc, radius, samples: int, n: int, W: Chamber, spec: FieldSpec,
                   params: ProductParams) -> list[mpmath.mpc]:
    values = []
    for j in range(samples):
        point = tau0 + radius * mpmath.expjpi(mpmath.mpf(2 * j) / samples)
        values.append(xi_jn(point, n, W, spec, params).value)
    return values


def _increments(values: list[mpmath.mpc]) -> list[mpmath.mpf]:
    return [mpmath.arg(values[(j + 1) % len(values)] / values[j]) for j in range(len(values))]


def zero_order(tau0, n: int, W: Chamber, spec: FieldSpec, radius=0.05, samples: int = 64,
               params: ProductParams = ProductParams(), max_refinements: int = 5) -> int:
    """Winding number of Xi(j_n; W) around the circle |tau - tau0| = radius.

    Every principal-branch increment of arg Xi between neighbouring samples must stay
    below pi/2; otherwise the sampling is doubled, at most max_refinements times.
    """
    if samples < 4:
        raise InvalidInputError(f"need at least 4 samples, got {samples}")
    with mpmath.workprec(params.prec_bits):
        t0 = as_mpc(tau0, params.prec_bits)
        r = _real(radius)
        if r <= 0:
            raise InvalidInputError(f"radius must be positive, got {radius}")
        check_region(mpmath.mpc(t0.real, t0.imag - r), n, spec, params)
        count = samples
        for attempt in range(max_refinements + 1):
            steps = _increments(_circle_values(t0, r, count, n, W, spec, params))
            worst = max(abs(s) for s in steps)
            if worst < QUARTER_TURN:
                winding = mpmath.fsum(steps) / (2 * mpmath.pi)
                order = int(mpmath.nint(winding))
                logger.debug("zero_order at %s: winding %s with %d samples", t0, mpmath.nstr(winding, 8), count)
                return order
            logger.debug("argument step %s >= pi/2 with %d samples, refining", mpmath.nstr(worst, 5), count)
            count *= 2
    raise InconclusiveError(
        f"argument increments stayed >= pi/2 after {max_refinements} refinements ({count // 2} samples)"
    )


def _real(x) -> mpmath.mpf:
    return to_mpf(x) if isinstance(x, Fraction) else mpmath.mpf(x)


def _steps(lo, hi, count: int) -> list[mpmath.mpf]:
    if count < 1:
        raise InvalidInputError(f"grid needs at least one step, got {count}")
    lo, hi = _real(lo), _real(hi)
    if count == 1:
        return [lo]
    return [lo + (hi - lo) * j / (count - 1) for j in range(count)]


def xi_grid(n: int, W: Chamber, spec: FieldSpec, re_range: tuple, im_range: tuple, steps: tuple[int, int],
            params: ProductParams = ProductParams()) -> list[tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]]:
    """(Re tau, Im tau, log|Xi|) over a rectangular grid of tau, row by row in Im tau."""
    rows = []
    with mpmath.workprec(params.prec_bits):
        for y in _steps(*im_range, steps[1]):
            for x in _steps(*re_range, steps[0]):
                rows.append((x, y, xi_jn(mpmath.mpc(x, y), n, W, spec, params).log_abs))
    return rows
