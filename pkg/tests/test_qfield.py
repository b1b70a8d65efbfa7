"""
Unit tests for exact arithmetic in Q(sqrt(d)).
"""
from fractions import Fraction

import mpmath
import pytest

from u11_lift.errors import InvalidInputError
from u11_lift.qfield import as_mpc, embed, in_inv_different, in_OF, make_field, norm, trace, unit_group


class TestMakeField:
    """Tests for field construction and discriminants."""

    @pytest.mark.parametrize("d, disc", [(-1, -4), (-2, -8), (-3, -3), (-5, -20), (-7, -7), (-11, -11)])
    def test_discriminant(self, d, disc):
        """Test D_F = d for d = 1 mod 4 and 4d otherwise."""
        assert make_field(d).disc == disc

    @pytest.mark.parametrize("d", [-4, -12, 0, 3])
    def test_rejects_invalid_d(self, d):
        """Test that non-square-free or non-negative d is rejected."""
        with pytest.raises(InvalidInputError):
            make_field(d)

    def test_zeta_minimal_polynomial(self):
        """Test trace and norm of zeta."""
        gauss = make_field(-1)
        eisenstein = make_field(-3)
        assert (gauss.trace_zeta, gauss.norm_zeta) == (0, 1)
        assert (eisenstein.trace_zeta, eisenstein.norm_zeta) == (1, 1)
        assert make_field(-7).norm_zeta == 2


class TestFieldElem:
    """Tests for FieldElem arithmetic."""

    @pytest.fixture(params=[-1, -2, -3, -7, -11])
    def spec(self, request):
        return make_field(request.param)

    def test_zeta_squared(self, spec):
        """Test zeta^2 = tr(zeta) zeta - N(zeta)."""
        zeta = spec.zeta()
        assert zeta * zeta == spec.trace_zeta * zeta - spec.norm_zeta

    def test_delta_squares_to_discriminant(self, spec):
        """Test delta^2 = D_F and delta * delta^-1 = 1."""
        assert spec.delta() * spec.delta() == spec.disc
        assert spec.delta() * spec.delta_inv() == 1

    def test_conjugation_and_norm(self, spec):
        """Test x * conj(x) = N(x) and x + conj(x) = tr(x)."""
        x = spec.elem(3, -2)
        assert x * x.conj() == x.norm()
        assert x + x.conj() == x.trace()
        assert x.conj().conj() == x

    def test_division_roundtrip(self, spec):
        """Test (x / y) * y = x."""
        x, y = spec.elem(2, 5), spec.elem(-1, 3)
        assert (x / y) * y == x
        assert (x ** -2) * x * x == 1

    def test_norm_multiplicative(self, spec):
        """Test N(x y) = N(x) N(y)."""
        values = [spec.elem(Fraction(a, 3), Fraction(b, 2)) for a in range(-4, 5) for b in range(-3, 4)]
        for x in values[::5]:
            for y in values[::3]:
                assert norm(x * y) == norm(x) * norm(y)

    def test_division_by_zero(self, spec):
        """Test that dividing by zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            spec.one() / spec.zero()

    def test_fraction_coefficients(self, spec):
        """Test scaling keeps exact rationals."""
        x = spec.elem(1, 1).scale(Fraction(1, 3))
        assert x.a == Fraction(1, 3) and x.b == Fraction(1, 3)
        assert not x.is_integral()

    def test_mixed_fields_rejected(self):
        """Test that elements of different fields do not combine."""
        with pytest.raises(ValueError):
            make_field(-1).one() + make_field(-3).one()


class TestEmbedding:
    """Tests for the complex embedding."""

    def test_gaussian_zeta_is_i(self):
        """Test zeta = i for d = -1."""
        assert abs(embed(make_field(-1).zeta()) - 1j) < 1e-15

    def test_eisenstein_zeta(self):
        """Test zeta = (1 + i sqrt 3)/2 for d = -3."""
        with mpmath.workprec(128):
            value = make_field(-3).zeta().embed(128)
            expected = mpmath.mpc(mpmath.mpf(1) / 2, mpmath.sqrt(3) / 2)
            assert abs(value - expected) < mpmath.mpf("1e-35")

    def test_delta_has_positive_imaginary_part(self):
        """Test Im(delta) = |delta| > 0."""
        for d in (-1, -2, -3, -7):
            spec = make_field(d)
            assert abs(spec.delta().embed(128).imag - spec.abs_delta(128)) < 1e-30

    def test_sqrt_minus_two(self):
        """Test 1 + zeta = 1 + i sqrt 2 for d = -2."""
        spec = make_field(-2)
        with mpmath.workprec(128):
            value = embed(spec.one() + spec.zeta(), 128)
            assert abs(value - mpmath.mpc(1, mpmath.sqrt(2))) < mpmath.mpf("1e-35")
        assert abs(embed(spec.one() + spec.zeta()).imag - 1.41421356) < 1e-8

    def test_precision_floor(self):
        """Test that embed refuses less than double precision."""
        with pytest.raises(InvalidInputError):
            embed(make_field(-1).one(), precision=32)

    def test_as_mpc_accepts_pairs(self):
        """Test as_mpc on string and Fraction pairs."""
        assert abs(as_mpc(("0.5", "2")) - mpmath.mpc(0.5, 2)) < 1e-15
        assert abs(as_mpc((Fraction(1, 4), 1)) - mpmath.mpc(0.25, 1)) < 1e-15


class TestIdeals:
    """Tests for O_F, the inverse different and the units."""

    def test_inverse_different(self):
        """Test delta^-1 lies in D_F^-1 but not in O_F."""
        for d in (-1, -2, -3, -7):
            spec = make_field(d)
            assert in_inv_different(spec.delta_inv())
            assert not in_OF(spec.delta_inv())
            assert in_inv_different(spec.one())

    @pytest.mark.parametrize("d", [-1, -2, -3, -7, -11])
    def test_inverse_different_is_trace_dual(self, d):
        """Test e lies in D_F^-1 iff tr(e) and tr(e zeta) are integers."""
        spec = make_field(d)
        inside = outside = 0
        for a in range(-8, 9):
            for b in range(-8, 9):
                e = spec.elem(Fraction(a, 6), Fraction(b, 6))
                dual = trace(e).denominator == 1 and trace(e * spec.zeta()).denominator == 1
                assert in_inv_different(e) == dual
                inside += dual
                outside += not dual
        assert inside and outside

    @pytest.mark.parametrize("d, count", [(-1, 4), (-2, 2), (-3, 6), (-7, 2)])
    def test_unit_group(self, d, count):
        """Test the roots of unity have norm one and the right count."""
        units = unit_group(make_field(d))
        assert len(units) == count
        assert all(u.norm() == 1 for u in units)
        assert len(set(units)) == count


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
