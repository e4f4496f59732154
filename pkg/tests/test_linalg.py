from hypothesis import given, strategies as st

from sympclif.linalg import in_span, nullspace, rank, solve
from sympclif.scalars import Scalar
from sympclif.spinor import Spinor

from conftest import gauss


def test_nullspace_oracle():
    # x + y + z = 0 and x - y = 0
    rows = [{0: 1, 1: 1, 2: 1}, {0: 1, 1: -1}]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    assert ns[0] == [Scalar.gauss(-1) / 2,
                     Scalar.gauss(-1) / 2, Scalar.gauss(1)]


def test_complex_rank():
    rows = [{0: Scalar.gauss(1, 1), 1: 2}, {0: 1, 1: Scalar.gauss(1, -1)}]
    # second row is the first times (1 - i)/2
    assert rank(rows) == 1


def test_solve_and_inconsistency():
    assert solve([{0: 2}], [4]) == [Scalar.gauss(2)]
    assert solve([{0: 1}, {0: 1}], [1, 2]) is None


def test_in_span():
    a = Spinor.monomial(1, x=1)
    b = Spinor.monomial(1, y=1)
    target = a * 3 + b * Scalar.gauss(0, 2)
    assert in_span(target, [a, b]) == [Scalar.gauss(3), Scalar.gauss(0, 2)]
    assert in_span(Spinor.monomial(1, q=1), [a, b]) is None


@given(st.lists(st.dictionaries(st.integers(0, 4), gauss(), max_size=4), min_size=1, max_size=4))
def test_nullspace_vectors_solve_the_system(rows):
    ns = nullspace(rows, 5)
    for v in ns:
        for r in rows:
            total = Scalar()
            for c, val in r.items():
                total = total + val * v[c]
            assert not total
    assert len(ns) + rank(rows) == 5
