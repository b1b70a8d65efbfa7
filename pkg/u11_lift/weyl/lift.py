"""Wall-crossing function Phi_m^K and the Weyl vectors of F_m, j_n and general f."""

import logging
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from ..errors import InvalidInputError, WallError
from ..qexp import sigma
from ..qfield import to_mpf
from .chambers import DEFAULT_WALL_TOLERANCE, wall_sign, chamber_of_Y, check_chamber, divisors
from .models import Chamber, Wall, WeylVector

logger = logging.getLogger(__name__)

CONSTANT_WEYL_VECTOR = WeylVector(Fraction(1, 24), Fraction(1, 24))


def _positive_Y(Y) -> tuple[mpmath.mpf, mpmath.mpf]:
    y1, y2 = (to_mpf(y) if isinstance(y, (int, Fraction)) else mpmath.mpf(y) for y in Y)
    if y1 <= 0 or y2 <= 0:
        raise InvalidInputError("Y must lie in the positive cone (y1 > 0, y2 > 0)")
    return y1, y2


def norm_Y(y1, y2) -> mpmath.mpf:
    """|Y| = sqrt(B(Y, Y)) = sqrt(2 y1 y2)."""
    return mpmath.sqrt(2 * y1 * y2)


def phi_K(m: int, Y, prec: int = 128) -> mpmath.mpf:
    """Phi_m^K(Y) summed over the positive divisors t of |m|."""
    if m >= 0:
        raise InvalidInputError(f"m must be negative, got {m}")
    with mpmath.workprec(prec):
        y1, y2 = _positive_Y(Y)
        total = mpmath.mpf(0)
        for t in divisors(-m):
            c = mpmath.mpf(m) / t
            total += abs(-t * y2 + c * y1) - abs(t * y2 + c * y1)
        return 4 * mpmath.sqrt(2) * mpmath.pi / norm_Y(y1, y2) * total


def _in_closure(W: Chamber, Y, tolerance: float) -> bool:
    y1, y2 = Y
    n = W.n
    if wall_sign(n * y1, W.t_lo ** 2 * y2, tolerance) < 0:
        return False
    return W.t_hi is None or wall_sign(n * y1, W.t_hi ** 2 * y2, tolerance) <= 0


def phi_K_chamber(m: int, W: Chamber, Y, prec: int = 128,
                  tolerance: float = DEFAULT_WALL_TOLERANCE) -> mpmath.mpf:
    """Chamber form (8 sqrt2 pi / |Y|) (sum_{t>=t_hi} (|m|/t) y1 + sum_{t<=t_lo} t y2)."""
    check_chamber(m, W)
    exact = all(isinstance(y, (int, Fraction)) for y in Y)
    with mpmath.workprec(prec):
        y1, y2 = _positive_Y(Y)
        point = tuple(Fraction(y) for y in Y) if exact else (y1, y2)
        if not _in_closure(W, point, tolerance):
            raise InvalidInputError(f"Y does not lie in {W.label()}")
        n = W.n
        upper = sum(Fraction(n, t) for t in divisors(n) if W.t_hi is not None and t >= W.t_hi)
        lower = sum(t for t in divisors(n) if t <= W.t_lo)
        return 8 * mpmath.sqrt(2) * mpmath.pi / norm_Y(y1, y2) * (to_mpf(upper) * y1 + lower * y2)


def weyl_vector_Fm(m: int, W: Chamber) -> WeylVector:
    """rho_m(W): rho1 = sum_{t<=t_lo} t, rho2 = sum_{t>=t_hi} |m|/t."""
    check_chamber(m, W)
    n = W.n
    rho1 = sum(t for t in divisors(n) if t <= W.t_lo)
    rho2 = sum(n // t for t in divisors(n) if W.t_hi is not None and t >= W.t_hi)
    return WeylVector(rho1, rho2)


def weyl_vector_jn(n: int, W: Chamber) -> WeylVector:
    """rho(j_n; W): rho1 = -sum_{t>=t_hi} t, rho2 = -sum_{t<=t_lo} n/t."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    check_chamber(-n, W)
    rho1 = -sum(t for t in divisors(n) if W.t_hi is not None and t >= W.t_hi)
    rho2 = -sum(n // t for t in divisors(n) if t <= W.t_lo)
    return WeylVector(rho1, rho2)


def rho_zero(m: int) -> WeylVector:
    """sigma(|m|)(e3 + e4), the difference rho_m(W) - rho(j_|m|; W) in every chamber."""
    if m >= 0:
        raise InvalidInputError(f"m must be negative, got {m}")
    s = sigma(-m)
    return WeylVector(s, s)


def chambers_for_f(principal: dict[int, int], Y, tolerance: float = DEFAULT_WALL_TOLERANCE) -> dict[int, Chamber]:
    """Chamber W_m of every index with c(m) != 0 containing Y; their intersection is W."""
    result = {}
    for m, c in sorted(principal.items()):
        if not c:
            continue
        if m >= 0:
            raise InvalidInputError(f"principal part index must be negative, got {m}")
        found = chamber_of_Y(m, Y, tolerance)
        if isinstance(found, Wall):
            raise WallError(found.m, found.t)
        result[m] = found
    return result


def weyl_vector_f(principal: dict[int, int], c0: int, Y,
                  tolerance: float = DEFAULT_WALL_TOLERANCE) -> WeylVector:
    """rho(f; W) = sum c(m) rho(j_|m|; W_m) + c0 (1/24, 1/24) for the chamber W containing Y."""
    rho = c0 * CONSTANT_WEYL_VECTOR
    for m, W in chambers_for_f(principal, Y, tolerance).items():
        rho = rho + principal[m] * weyl_vector_jn(-m, W)
    return rho


def whittaker_m(z) -> mpmath.mpf:
    """M_{0,1/2}(z) = 2 sinh(z/2)."""
    return 2 * mpmath.sinh(z / 2)


def verify_whittaker_identity(points: Sequence = (0.5, 2, 7), prec: int = 128) -> list[tuple]:
    """Compare 2 sinh(z/2) with mpmath's Whittaker M_{0,1/2} at sample points."""
    out = []
    with mpmath.workprec(prec):
        for z in points:
            z = mpmath.mpf(z)
            closed, reference = whittaker_m(z), mpmath.whitm(0, mpmath.mpf(1) / 2, z)
            out.append((z, closed, reference, abs(closed - reference) / abs(reference)))
    return out


def whittaker_check(m: int, Qlv, quad_points: Optional[Sequence] = None,
                    prec: int = 96) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Quadrature of the (1,1) Whittaker integral against 4 pi (sqrt(Q + |m|) - sqrt(Q)).

    quad_points are the breakpoints handed to the quadrature (default 0, 1, inf).
    """
    if m >= 0:
        raise InvalidInputError(f"m must be negative, got {m}")
    with mpmath.workprec(prec):
        Q = to_mpf(Qlv) if isinstance(Qlv, (int, Fraction)) else mpmath.mpf(Qlv)
        if Q <= 0:
            raise InvalidInputError(f"Q(lambda_v) must be positive, got {Qlv}")
        n = -m
        four_pi = 4 * mpmath.pi

        def integrand(y):
            return whittaker_m(four_pi * n * y) * y ** (-mpmath.mpf(3) / 2) * mpmath.exp(-four_pi * y * Q - 2 * mpmath.pi * y * n)

        points = list(quad_points) if quad_points is not None else [0, 1, mpmath.inf]
        numeric = mpmath.quad(integrand, points)
        closed = four_pi * (mpmath.sqrt(Q + n) - mpmath.sqrt(Q))
        logger.debug("whittaker m=%d Q=%s numeric=%s closed=%s", m, Q, numeric, closed)
        return numeric, closed
