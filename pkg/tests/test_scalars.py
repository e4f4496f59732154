import math
from fractions import Fraction

import pytest
from hypothesis import given

from sympclif.scalars import ALPHA, I, ONE, TAU, ZERO, Scalar, as_scalar

from conftest import scalars


def test_i_squared():
    assert I * I == -ONE


def test_gauss_arithmetic_oracle():
    a = Scalar.gauss(Fraction(1, 2), 3)
    b = Scalar.gauss(-2, Fraction(1, 3))
    assert a * b == Scalar.gauss(Fraction(-2), Fraction(-35, 6))
    assert a / b * b == a


def test_symbols_stay_formal():
    assert TAU * TAU != Scalar.gauss(math.pi)
    assert (TAU + ALPHA) ** 2 == TAU * TAU + TAU * ALPHA * 2 + ALPHA * ALPHA


def test_to_complex_uses_root_pi():
    assert abs((TAU * 3).to_complex() - 3 * math.sqrt(math.pi)) < 1e-15
    assert (ALPHA * I).to_complex(2.0) == 2j


def test_string_forms():
    assert str(Scalar.gauss(Fraction(-1, 2), 1)) == "(-1/2 + 1*i)"
    assert str(ZERO) == "0"
    assert str(TAU * Scalar.gauss(0, -3)) == "(-3*i)*t^1"


def test_inverse_rejects_symbols_and_zero():
    with pytest.raises(ZeroDivisionError):
        TAU.inverse()
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_as_scalar():
    assert as_scalar(3) == Scalar.gauss(3)
    assert as_scalar(2 - 1j) == Scalar.gauss(2, -1)
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)


def test_truncate_alpha():
    s = ONE + ALPHA + ALPHA ** 3 * TAU
    assert s.truncate_alpha(1) == ONE + ALPHA
    assert s.alpha_degree() == 3 and s.tau_degree() == 1


@given(scalars())
def test_parse_roundtrip(s):
    assert Scalar.parse(str(s)) == s


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(scalars(), scalars())
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@given(scalars(max_alpha=0), scalars(max_alpha=0))
def test_float_image_is_a_ring_map(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9 * (1 + abs(a.to_complex() * b.to_complex()))
