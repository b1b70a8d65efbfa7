"""
Unit tests for Weyl chambers, Weyl vectors and the wall-crossing function.
"""
import random
from fractions import Fraction

import mpmath
import pytest

from u11_lift.errors import InvalidInputError, WallError
from u11_lift.qexp import sigma
from u11_lift.qfield import make_field
from u11_lift.weyl import (
    Chamber,
    Wall,
    WeylVector,
    chamber_from_bounds,
    chamber_of_tau,
    chamber_of_Y,
    chambers,
    divisors,
    mirror_chamber,
    norm_Y,
    phi_K,
    phi_K_chamber,
    rho_zero,
    strip_bounds,
    verify_whittaker_identity,
    wall_crossing_vector,
    weyl_vector_f,
    weyl_vector_Fm,
    weyl_vector_jn,
    whittaker_check,
)


def _sample_Y(W: Chamber, rng: random.Random):
    """Random point strictly inside W, with y2 = 1."""
    n = W.n
    lo = mpmath.mpf(W.t_lo ** 2) / n
    hi = mpmath.mpf(W.t_hi ** 2) / n if W.t_hi is not None else 6 * lo
    u = mpmath.mpf(rng.uniform(0.05, 0.95))
    return lo + (hi - lo) * u, mpmath.mpf(1)


class TestChambers:
    """Tests for the chamber decomposition of index m."""

    def test_chamber_count(self):
        """Test every index m has d(|m|) + 1 chambers."""
        for m in range(-1, -13, -1):
            assert len(chambers(m)) == len(divisors(-m)) + 1

    def test_chamber_boundaries(self):
        """Test the chambers of index -6 in traversal order."""
        labels = [W.label() for W in chambers(-6)]
        assert labels == ["W(0,1)", "W(1,2)", "W(2,3)", "W(3,6)", "W(6,inf)"]

    def test_rejects_nonnegative_index(self):
        """Test that m >= 0 is rejected."""
        with pytest.raises(InvalidInputError):
            chambers(0)
        with pytest.raises(InvalidInputError):
            chamber_from_bounds(-6, 1, 3)

    def test_chamber_of_Y(self):
        """Test locating Y against the walls t^2 y2 = |m| y1."""
        assert chamber_of_Y(-1, (2, 1)) == Chamber(-1, 1, None)
        assert chamber_of_Y(-1, (Fraction(1, 2), 1)) == Chamber(-1, 0, 1)
        assert chamber_of_Y(-6, (1, 1)) == Chamber(-6, 2, 3)

    def test_point_on_wall(self):
        """Test that exact points on a wall are reported as such."""
        assert chamber_of_Y(-1, (1, 1)) == Wall(-1, 1)
        assert chamber_of_Y(-6, (Fraction(3, 2), 1)) == Wall(-6, 3)

    def test_inexact_wall_tolerance(self):
        """Test numerically perturbed wall points within the tolerance."""
        y1 = mpmath.mpf(1) + mpmath.mpf(10) ** -20
        assert chamber_of_Y(-1, (y1, mpmath.mpf(1))) == Wall(-1, 1)

    def test_chamber_of_tau(self):
        """Test tau = 3i for d = -1 lies in W(1,inf) of index -1."""
        assert chamber_of_tau(-1, (0, 3), make_field(-1)) == Chamber(-1, 1, None)

    def test_strip_bounds(self):
        """Test the wall of index -1 for d = -1 is the line Im tau = 1."""
        assert strip_bounds(-1, make_field(-1)) == [(1, 1)]

    def test_mirror_chamber(self):
        """Test the swap (y1, y2) -> (y2, y1) on chambers of index -6."""
        assert mirror_chamber(Chamber(-6, 0, 1)) == Chamber(-6, 6, None)
        assert mirror_chamber(Chamber(-6, 1, 2)) == Chamber(-6, 3, 6)
        assert mirror_chamber(Chamber(-6, 2, 3)) == Chamber(-6, 2, 3)
        for W in chambers(-12):
            assert mirror_chamber(mirror_chamber(W)) == W


class TestWeylVectors:
    """Tests for the Weyl vectors of F_m and j_n."""

    def test_extreme_chambers(self):
        """Test rho(j_n) in W(0,1) and W(n,inf) for n <= 50."""
        for n in range(1, 51):
            assert weyl_vector_jn(n, Chamber(-n, 0, 1)) == WeylVector(-sigma(n), 0)
            assert weyl_vector_jn(n, Chamber(-n, n, None)) == WeylVector(0, -sigma(n))

    def test_poincare_minus_faber(self):
        """Test rho_m(W) - rho(j_|m|; W) = sigma(|m|)(e3 + e4) in every chamber."""
        for m in range(-1, -13, -1):
            for W in chambers(m):
                assert weyl_vector_Fm(m, W) - weyl_vector_jn(-m, W) == rho_zero(m)

    def test_wall_crossing(self):
        """Test crossing wall t changes both Weyl vectors by t e3 - (|m|/t) e4."""
        for m in range(-1, -13, -1):
            walls = chambers(m)
            for before, after in zip(walls, walls[1:]):
                t = after.t_lo
                step = wall_crossing_vector(m, t)
                assert weyl_vector_Fm(m, after) - weyl_vector_Fm(m, before) == step
                assert weyl_vector_jn(-m, after) - weyl_vector_jn(-m, before) == step

    def test_crossing_vector_norm(self):
        """Test the crossing vector has norm rho1 * rho2 = m."""
        v = wall_crossing_vector(-12, 3)
        assert v.rho1 * v.rho2 == -12

    def test_mirror_swaps_components(self):
        """Test rho(mirror W) is rho(W) with its components swapped."""
        for n in range(1, 31):
            for W in chambers(-n):
                image = mirror_chamber(W)
                assert weyl_vector_jn(n, image) == weyl_vector_jn(n, W).swapped()
                assert weyl_vector_Fm(-n, image) == weyl_vector_Fm(-n, W).swapped()

    def test_chamber_index_mismatch(self):
        """Test a chamber of another index is rejected."""
        with pytest.raises(InvalidInputError):
            weyl_vector_jn(2, Chamber(-3, 0, 1))


class TestWallCrossingFunction:
    """Tests for Phi_m^K."""

    def test_matches_weyl_vector(self):
        """Test Phi_m^K(Y) = 8 sqrt2 pi B(Y/|Y|, rho_m(W)) on random points of every chamber."""
        rng = random.Random(20240611)
        with mpmath.workprec(128):
            scale = 8 * mpmath.sqrt(2) * mpmath.pi
            for m in range(-1, -13, -1):
                for W in chambers(m):
                    rho = weyl_vector_Fm(m, W)
                    for _ in range(100):
                        y1, y2 = _sample_Y(W, rng)
                        assert chamber_of_Y(m, (y1, y2)) == W
                        expected = scale * rho.pair(y1, y2) / norm_Y(y1, y2)
                        assert abs(phi_K(m, (y1, y2)) - expected) < 1e-12

    def test_chamber_form(self):
        """Test the chamber form agrees with the divisor sum."""
        Y = (Fraction(5, 2), Fraction(1))
        W = chamber_of_Y(-6, Y)
        assert abs(phi_K_chamber(-6, W, Y) - phi_K(-6, Y)) < 1e-25

    @pytest.mark.parametrize("m", [-6, -12])
    def test_continuous_across_walls(self, m):
        """Test the chamber forms on both sides of a wall agree on the wall."""
        n = -m
        with mpmath.workprec(128):
            for t in divisors(n):
                Y = (t * t, n)
                assert chamber_of_Y(m, Y) == Wall(m, t)
                below = next(W for W in chambers(m) if W.t_hi == t)
                above = next(W for W in chambers(m) if W.t_lo == t)
                left, right = phi_K_chamber(m, below, Y), phi_K_chamber(m, above, Y)
                assert abs(left - right) < 1e-28
                assert abs(left - phi_K(m, Y)) < 1e-28

    def test_chamber_form_outside(self):
        """Test the chamber form refuses points outside its chamber."""
        with pytest.raises(InvalidInputError):
            phi_K_chamber(-6, Chamber(-6, 0, 1), (5, 1))

    def test_rejects_bad_Y(self):
        """Test Y outside the positive cone."""
        with pytest.raises(InvalidInputError):
            phi_K(-1, (-1, 1))


class TestGeneralForms:
    """Tests for the Weyl vector of a general weakly holomorphic f."""

    def test_j1_plus_24(self):
        """Test rho(j_1 + 24) at Y = (4, 1) is (1, 0)."""
        assert weyl_vector_f({-1: 1}, 24, (4, 1)) == WeylVector(1, 0)

    def test_constant_form(self):
        """Test the constant form c0 has Weyl vector c0 (1/24, 1/24)."""
        assert weyl_vector_f({}, 3, (1, 1)) == WeylVector(Fraction(1, 8), Fraction(1, 8))

    def test_linearity(self):
        """Test rho(2 j_1 + j_2) = 2 rho(j_1) + rho(j_2)."""
        Y = (Fraction(7, 3), 1)
        combined = weyl_vector_f({-1: 2, -2: 1}, 0, Y)
        parts = 2 * weyl_vector_f({-1: 1}, 0, Y) + weyl_vector_f({-2: 1}, 0, Y)
        assert combined == parts

    def test_wall_raises(self):
        """Test Y on a wall of some W_m raises WallError."""
        with pytest.raises(WallError) as info:
            weyl_vector_f({-1: 1}, 24, (1, 1))
        assert info.value.t == 1


class TestWhittaker:
    """Tests for the Whittaker integral used by the wall-crossing computation."""

    def test_sinh_identity(self):
        """Test M_{0,1/2}(z) = 2 sinh(z/2)."""
        for _, closed, reference, rel in verify_whittaker_identity():
            assert rel < 1e-25

    @pytest.mark.parametrize("m", [-1, -2, -6])
    @pytest.mark.parametrize("Q", [Fraction(1, 2), Fraction(1), Fraction(10)])
    def test_quadrature(self, m, Q):
        """Test the quadrature against 4 pi (sqrt(Q + |m|) - sqrt(Q))."""
        numeric, closed = whittaker_check(m, Q)
        assert abs(numeric - closed) < 1e-8

    def test_rejects_nonpositive_Q(self):
        """Test Q <= 0 is rejected."""
        with pytest.raises(InvalidInputError):
            whittaker_check(-1, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
