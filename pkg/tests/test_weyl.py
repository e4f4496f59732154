import pytest
from hypothesis import given

from sympclif.scalars import I, Scalar
from sympclif.weyl import WeylElement, commutator, gen

from conftest import weyl_elements


def test_canonical_commutators():
    for kind in ("x", "y", "q"):
        assert commutator(gen("d" + kind), gen(kind)) == WeylElement.scalar(1)
    assert not commutator(gen("x"), gen("dy"))


def test_leibniz_oracle():
    # dq^2 q^2 = q^2 dq^2 + 4 q dq + 2
    dq, q = gen("dq"), gen("q")
    lhs = dq * dq * q * q
    rhs = q * q * dq * dq + q * dq * 4 + WeylElement.scalar(1, 2)
    assert lhs == rhs


def test_dimension_checks():
    with pytest.raises(ValueError):
        gen("x", 2, n=1)
    with pytest.raises(ValueError):
        gen("x") + gen("x", 1, n=2)
    with pytest.raises(ValueError):
        WeylElement(1, {(0, 0): 1})


def test_string_and_json():
    e = gen("x") * gen("dq") * I
    assert str(e) == "[(1*i)]*x*dq"
    assert WeylElement.from_json(e.to_json()) == e


def test_order():
    e = gen("x") * gen("x") * gen("dq") + gen("dy")
    assert e.order() == 3 and e.derivative_order() == 1


@given(weyl_elements(), weyl_elements(), weyl_elements())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(weyl_elements(), weyl_elements(), weyl_elements())
def test_jacobi(a, b, c):
    total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert not total


@given(weyl_elements(), weyl_elements())
def test_bracket_antisymmetric(a, b):
    assert commutator(a, b) == -commutator(b, a)


@given(weyl_elements(n=2, max_exp=1), weyl_elements(n=2, max_exp=1))
def test_distributive_n2(a, b):
    c = gen("q", 2, n=2) + gen("dx", 1, n=2) * Scalar.gauss(0, 2)
    assert (a + b) * c == a * c + b * c
