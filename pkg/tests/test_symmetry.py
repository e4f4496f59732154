from sympclif import oplib as O
from sympclif.symmetry import (nonclosure_check, reference_symmetries, same_span, solve_symmetries,
                               split_first_order, structural_constraints_check)


def test_degree_zero():
    b = solve_symmetries(0)
    assert b.dimension == 3
    assert same_span(b.A, [O.dx(), O.dy(), O.one(1)])


def test_degree_three():
    b = solve_symmetries(3)
    assert b.dimension == 7
    assert same_span(b.A, list(reference_symmetries().values()))
    for A, B in zip(b.A, b.B):
        assert O.Ds(1) * A == B * O.Ds(1)


def test_stable_in_degree():
    a4, a5 = solve_symmetries(4), solve_symmetries(5)
    assert a4.dimension == a5.dimension == 7
    assert same_span(a4.A, a5.A)


def test_mixed_operator_is_symmetry():
    from sympclif.linalg import in_span

    b = solve_symmetries(3)
    assert in_span(reference_symmetries()["mixed"], b.A) is not None


def test_shapes():
    for rep in structural_constraints_check(3).values():
        assert all(rep.values())
    F0, F1, F2, F3 = split_first_order(O.Xtilde())
    assert F0 == {(0, 1, 0): -O.one(1).coefficient((0,) * 6)}
    assert set(F3) == {(0, 0, 2)}


def test_nonclosure():
    r = nonclosure_check()
    assert r == {"witness_formula": True, "outside_span": True, "span_rank": 9}


def test_deterministic_basis():
    assert solve_symmetries(3).to_json() == solve_symmetries(3).to_json()
