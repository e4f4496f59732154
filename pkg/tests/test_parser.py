from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sympclif import oplib as O
from sympclif.parser import BinOp, Imag, Name, Neg, Num, ParseError, Pow, evaluate, parse, render
from sympclif.weyl import WeylElement


def test_dirac_operator_text():
    assert evaluate("i*q*dy - dx*dq") == O.Ds(1)


def test_power():
    assert evaluate("Xs^2") == O.Xs(1) ** 2
    assert parse("x^2^3") == Pow(Pow(Name("x"), 2), 3)


def test_precedence():
    assert parse("-x*y") == Neg(BinOp("*", Name("x"), Name("y")))
    assert parse("1 - x - y") == BinOp("-", BinOp("-", Num(Fraction(1)), Name("x")), Name("y"))
    assert parse("3/2*q") == BinOp("*", Num(Fraction(3, 2)), Name("q"))


def test_errors():
    with pytest.raises(ParseError) as e:
        parse("Z1 + (")
    assert e.value.offset == 5
    with pytest.raises(ParseError) as e:
        parse("foo + x")
    assert e.value.offset == 0
    with pytest.raises(ParseError):
        parse("x^1/2")
    with pytest.raises(ParseError):
        parse("x)")


def test_indexed_generators():
    assert evaluate("x2*dq1", 2) == O.x(2, 2) * O.dq(1, 2)
    assert evaluate("Z_3", 2) == O.Z_general(3, 2)


def test_rational_and_imaginary():
    assert evaluate("1/2*i") == WeylElement.scalar(1, O.I / 2)


leaves = st.one_of(
    st.fractions(min_value=0, max_value=9, max_denominator=5).map(Num),
    st.just(Imag()),
    st.sampled_from(["x", "y", "q", "dx", "dy", "dq", "Xs", "Ds", "E", "Z1", "Htilde"]).map(Name),
)
exprs = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Neg),
        st.tuples(st.sampled_from("+-*"), kids, kids).map(lambda t: BinOp(*t)),
        st.tuples(kids, st.integers(0, 3)).map(lambda t: Pow(*t)),
    ),
    max_leaves=8,
)


@settings(max_examples=200)
@given(exprs)
def test_render_roundtrip(e):
    assert parse(render(e)) == e


@settings(max_examples=25)
@given(exprs.filter(lambda e: "^3" not in render(e)))
def test_evaluate_respects_rendering(e):
    assert evaluate(render(e)) == evaluate(e)
