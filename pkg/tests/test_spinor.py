from fractions import Fraction

import pytest
from hypothesis import given

from sympclif.scalars import I, ONE, Scalar
from sympclif.spinor import Spinor, apply, grade, hermite_unnorm
from sympclif.weyl import gen

from conftest import spinors, weyl_elements


def test_dq_acts_through_gaussian():
    # dq (q G) = (1 - q^2) G
    s = apply(gen("dq"), Spinor.monomial(1, q=1))
    assert s == Spinor(1, {(0, 0, 0): 1, (0, 0, 2): -1})


def test_hermite_polynomials():
    # H_3 = 8q^3 - 12q
    assert hermite_unnorm(3) == Spinor(1, {(0, 0, 3): 8, (0, 0, 1): -12})
    assert hermite_unnorm(0) == Spinor.one(1)
    with pytest.raises(ValueError):
        hermite_unnorm(-1)


def test_grading():
    s = Spinor.monomial(1, x=1, q=2) + Spinor.monomial(1, y=2)
    g = grade(s)
    assert sorted(g) == [1, 2] and not s.is_homogeneous()


def test_json_roundtrip():
    s = Spinor.monomial(1, Scalar.gauss(Fraction(1, 3), -2), x=1, q=4)
    assert Spinor.from_json(s.to_json()) == s


@given(weyl_elements(), weyl_elements(), spinors())
def test_action_is_a_module(a, b, s):
    assert apply(a * b, s) == apply(a, apply(b, s))


@given(weyl_elements(), spinors(), spinors())
def test_action_is_linear(a, s, t):
    assert apply(a, s + t) == apply(a, s) + apply(a, t)


@given(spinors())
def test_hermite_raising(s):
    # (q - dq) commutes with multiplication by base variables
    op = gen("q") - gen("dq")
    xs = apply(gen("x"), s)
    assert apply(op, xs) == apply(gen("x"), apply(op, s))
