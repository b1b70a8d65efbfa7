"""Invariant suites run by `u11-lift check`.

Every check returns a CheckResult; a suite passes iff all of its checks do.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import mpmath

from .borcherds import ProductParams, eta, xi_const, xi_f, xi_jn, zero_order
from .errors import InvalidInputError
from .hermlattice import ebasis, gram_matrix, is_unimodular, real_bilinear, scalar_action
from .heegner import cm_order, factor_point, heegner_point, reduce_point, reduced_taus
from .qexp import J_CONSTANT, faber_basis, form_from_principal, j_series, j_series_from_e6
from .qfield import make_field
from .weyl import (
    chamber_from_bounds,
    chambers,
    divisors,
    norm_Y,
    phi_K,
    WeylVector,
    weyl_vector_Fm,
    weyl_vector_jn,
    whittaker_check,
)

logger = logging.getLogger(__name__)

HYPERBOLIC_GRAM = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
GRAM_FIELDS = (-1, -2, -3, -7, -11)
CONSTANT_LIFT_FIELDS = (-1, -2, -3, -7)
WHITTAKER_GRID = [(m, Q) for m in (-1, -2, -6) for Q in (Fraction(1, 2), Fraction(1), Fraction(10))]


@dataclass
class CheckResult:
    """Outcome of one named check."""
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def _result(suite: str, name: str, passed: bool, **detail) -> CheckResult:
    if not passed:
        logger.warning("check %s/%s failed: %s", suite, name, detail)
    return CheckResult(suite, name, bool(passed), {k: str(v) for k, v in detail.items()})


def check_chambers() -> list[CheckResult]:
    out = []
    for m in range(-1, -13, -1):
        found = chambers(m)
        n = -m
        count_ok = len(found) == len(divisors(n)) + 1
        bounds_ok = [W.t_lo for W in found] == [0] + divisors(n) and [W.t_hi for W in found] == divisors(n) + [None]
        out.append(_result("chambers", f"m={m}", count_ok and bounds_ok, count=len(found)))
    return out


def _random_Y(rng: random.Random, W) -> tuple[Fraction, Fraction]:
    """Exact Y strictly inside W."""
    n = W.n
    lo = Fraction(W.t_lo ** 2, n)
    hi = Fraction(W.t_hi ** 2, n) if W.t_hi is not None else lo * 4 + 4
    u = Fraction(rng.randint(1, 999), 1000)
    y2 = Fraction(rng.randint(1, 100), 10)
    return (lo + (hi - lo) * u) * y2, y2


def check_weyl(samples: int = 100, seed: int = 0, prec: int = 128) -> list[CheckResult]:
    out = []
    for n in range(1, 51):
        W0, Winf = chambers(-n)[0], chambers(-n)[-1]
        s = sum(divisors(n))
        ok = weyl_vector_jn(n, W0) == WeylVector(-s, 0) and weyl_vector_jn(n, Winf) == WeylVector(0, -s)
        out.append(_result("weyl", f"jn n={n}", ok))
    rng = random.Random(seed)
    tol = mpmath.mpf("1e-12")
    for m in range(-1, -13, -1):
        worst = mpmath.mpf(0)
        with mpmath.workprec(prec):
            for W in chambers(m):
                rho = weyl_vector_Fm(m, W)
                for _ in range(samples):
                    y1, y2 = _random_Y(rng, W)
                    a, b = mpmath.mpf(y1.numerator) / y1.denominator, mpmath.mpf(y2.numerator) / y2.denominator
                    lifted = 8 * mpmath.sqrt(2) * mpmath.pi * rho.pair(a, b) / norm_Y(a, b)
                    worst = max(worst, abs(phi_K(m, (y1, y2), prec) - lifted))
        out.append(_result("weyl", f"wall crossing m={m}", worst < tol, max_error=mpmath.nstr(worst, 5)))
    return out


def check_whittaker(prec: int = 96) -> list[CheckResult]:
    out = []
    for m, Q in WHITTAKER_GRID:
        numeric, closed = whittaker_check(m, Q, prec=prec)
        err = abs(numeric - closed)
        out.append(_result("whittaker", f"m={m} Q={Q}", err < 1e-8, error=mpmath.nstr(err, 5)))
    return out


def check_qexp(n_max: int = 20, N: int = 200) -> list[CheckResult]:
    j = j_series(3)
    j_alt = j_series_from_e6(3)
    j1 = faber_basis(1, 3)[0]
    out = [
        _result("qexp", "j c(1) = 196884", j.coeff(1) == 196884 and j_alt.coeff(1) == 196884),
        _result("qexp", "j1 = j - 744", all(j1.coeff(e) == (j - J_CONSTANT).coeff(e) for e in range(-1, 3))),
    ]
    basis = faber_basis(n_max, N)
    for n, f in enumerate(basis, start=1):
        ok = f.valuation == -n and f.coeff(-n) == 1 and f.coeff(0) == 0 and \
            all(f.coeff(e) == 0 for e in range(-n + 1, 0)) and f.prec == N
        out.append(_result("qexp", f"j{n} structure", ok))
    return out


def check_gram(prec: int = 128) -> list[CheckResult]:
    out = []
    tol = mpmath.mpf("1e-30")
    for d in GRAM_FIELDS:
        spec = make_field(d)
        basis = ebasis(spec)
        exact = gram_matrix(list(basis)) == HYPERBOLIC_GRAM
        with mpmath.workprec(prec):
            vecs = [e.embed(prec) for e in basis]
            worst = max(
                abs(real_bilinear(vecs[i], vecs[j]) - HYPERBOLIC_GRAM[i][j]) for i in range(4) for j in range(4)
            )
            rotated = [scalar_action(mpmath.mpc(0, 1), v) for v in vecs]
            drift = max(
                abs(real_bilinear(rotated[i], rotated[j]) - real_bilinear(vecs[i], vecs[j]))
                for i in range(4) for j in range(4)
            )
        out.append(_result("gram", f"ebasis d={d}", exact and worst < tol, max_error=mpmath.nstr(worst, 5)))
        out.append(_result("gram", f"i-rotation isometry d={d}", drift < tol, max_error=mpmath.nstr(drift, 5)))
        out.append(_result("gram", f"unimodular d={d}", is_unimodular(spec)))
    return out


def check_heegner(samples: int = 1000, seed: int = 0) -> list[CheckResult]:
    spec = make_field(-1)
    zeta = spec.zeta()
    worked = [(-zeta, spec.one()), (-2 * zeta, spec.one()), (-2 * zeta, spec.elem(2))]
    points = [heegner_point(l1, l2) for l1, l2 in worked]
    out = [
        _result("heegner", "worked conductors", [cm_order(h)[0] for h in points] == [1, 2, 1]),
        _result("heegner", "discriminants m^2 D_F",
                all(h.discriminant == h.m ** 2 * spec.disc for h in points)),
    ]

    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        while True:
            a, b, c, e = (rng.randint(-6, 6) for _ in range(4))
            if (c, e) != (0, 0) and (spec.elem(a, b) * spec.elem(c, e).conj()).b < 0:
                break
        h = heegner_point(spec.elem(a, b), spec.elem(c, e))
        if reduce_point(h).conductor != h.conductor:
            bad += 1
    out.append(_result("heegner", f"conductor invariant under reduction ({samples} points)", bad == 0, failures=bad))

    d2 = make_field(-2)
    h = factor_point(1, -1, 0, d2)
    out.append(_result("heegner", "d=-2 factor point i*sqrt(2)", h.tau == d2.zeta() and h.conductor == 1))
    out.append(_result("heegner", "m=-2 d=-1 stabilizes",
                       reduced_taus(-2, spec, 2) == reduced_taus(-2, spec, 4) == {spec.zeta(), 2 * spec.zeta()}))
    return out


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_products(prec: int = 128) -> list[CheckResult]:
    out = []
    with mpmath.workprec(prec):
        params = ProductParams(prec_bits=prec)

        # f = 1 reproduces eta(tau) * eta(-conj(zeta))
        one = form_from_principal({}, 1, 2)
        for d in CONSTANT_LIFT_FIELDS:
            spec = make_field(d)
            for tau in ((0, 1), (Fraction(1, 3), 2)):
                lifted = xi_f(tau, one, spec, params=params).value
                direct = eta(tau, prec_bits=prec) * eta(-mpmath.conj(spec.zeta_numeric(prec)), prec_bits=prec)
                err = _rel(lifted, direct)
                out.append(_result("products", f"constant lift d={d} tau={tau}", err < 1e-10, error=mpmath.nstr(err, 5)))

        # every chamber expansion gives the same |Xi|
        spec = make_field(-1)
        wide = ProductParams(max_kl=60, prec_bits=prec, region="theorem")
        for n in (1, 2):
            for tau in ((0, 3), (Fraction(3, 10), 4)):
                moduli = [abs(xi_jn(tau, n, W, spec, wide).value) for W in chambers(-n)]
                spread = max(_rel(a, moduli[0]) for a in moduli)
                out.append(_result("products", f"chamber consistency n={n} tau={tau}", spread < 1e-8,
                                   spread=mpmath.nstr(spread, 5)))

        # integer translations
        W = chamber_from_bounds(-1, 1, None)
        tau = mpmath.mpc("0.2", "3")
        a = xi_jn(tau, 1, W, spec, params).value
        b = xi_jn(tau + 1, 1, W, spec, params).value
        err = _rel(b, a)
        out.append(_result("products", "periodicity", err < mpmath.mpf("1e-25"), error=mpmath.nstr(err, 5)))

        # divisor of Xi(j_1) for d = -2
        d2 = make_field(-2)
        theorem = ProductParams(prec_bits=prec, region="theorem")
        W01 = chamber_from_bounds(-1, 0, 1)
        centre = mpmath.mpc(0, mpmath.sqrt(2))
        inside = zero_order(centre, 1, W01, d2, radius=0.05, params=theorem)
        shifted = zero_order(centre + mpmath.mpf(1) / 2, 1, W01, d2, radius=0.05, params=theorem)
        out.append(_result("products", "zero at i*sqrt(2)", inside == 1, order=inside))
        out.append(_result("products", "no zero at 1/2 + i*sqrt(2)", shifted == 0, order=shifted))

        # multiplicativity and weight
        f = form_from_principal({-1: 1}, 24, 41)
        tau = (0, 3)
        lifted = xi_f(tau, f, spec, Y=(4, 1), params=params)
        expected = abs(xi_jn(tau, 1, W, spec, params).value) * abs(xi_const(tau, spec, params).value) ** 24
        err = _rel(abs(lifted.value), expected)
        out.append(_result("products", "multiplicativity j1 + 24", err < 1e-8 and lifted.weight == 12,
                           error=mpmath.nstr(err, 5), weight=lifted.weight))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "chambers": check_chambers,
    "weyl": check_weyl,
    "whittaker": check_whittaker,
    "qexp": check_qexp,
    "heegner": check_heegner,
    "gram": check_gram,
    "products": check_products,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for suite in SUITES.values() for r in suite()]
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    return SUITES[name]()
