from fractions import Fraction

from hypothesis import settings, strategies as st

from sympclif.scalars import Scalar
from sympclif.spinor import Spinor
from sympclif.weyl import WeylElement

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def gauss(draw):
    return Scalar.gauss(draw(small_fracs), draw(small_fracs))


@st.composite
def scalars(draw, max_tau=2, max_alpha=2):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_tau), st.integers(0, max_alpha)),
        st.tuples(small_fracs, small_fracs), max_size=3))
    return Scalar(terms)


@st.composite
def weyl_elements(draw, n=1, max_exp=2, max_terms=3):
    keys = st.tuples(*[st.integers(0, max_exp)] * (6 * n))
    terms = draw(st.dictionaries(keys, gauss(), max_size=max_terms))
    return WeylElement(n, terms)


@st.composite
def spinors(draw, n=1, max_exp=3, max_terms=4):
    keys = st.tuples(*[st.integers(0, max_exp)] * (3 * n))
    terms = draw(st.dictionaries(keys, gauss(), max_size=max_terms))
    return Spinor(n, terms)


def frac(a, b=1):
    return Fraction(a, b)
