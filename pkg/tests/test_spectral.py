from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sympclif import spectral as S
from sympclif.bases import basis_real, monogenics_by_nullspace
from sympclif.scalars import ALPHA, I, ONE, Scalar
from sympclif.spinor import Spinor


def test_laguerre_oracles():
    assert S.laguerre_coeffs(0, 2, 1).beta == (ONE,)
    assert S.laguerre_coeffs(1, 0, 1).beta == (ONE, ALPHA)
    p = S.laguerre_coeffs(2, 1, 1)
    assert p.beta[2] == ALPHA ** 2 / 5
    assert S.laguerre_recursion_ok(S.laguerre_coeffs(3, 1, 1))


@given(st.integers(0, 6), st.integers(0, 4), st.integers(1, 3))
def test_laguerre_against_scipy(j, k, n):
    p = S.laguerre_coeffs(j, k, n)
    assert S.laguerre_recursion_ok(p)
    assert S.laguerre_scipy_check(p)


@given(st.integers(0, 7), st.integers(0, 7))
def test_rodrigues_matches_explicit_sum(j, b):
    assert S.laguerre_rodrigues(j, b) == S.laguerre_explicit(j, b)


def test_eigenvalue_oracles():
    assert S.eigenvalue(0, 0, 1) == -I * ALPHA
    assert S.eigenvalue(2, 1, 1) == -I * ALPHA * 4
    assert S.eigenvalue(0, 0, 3) == -I * ALPHA * 3


def test_conjugated_eigen_examples():
    assert S.verify_conjugated_eigen(0, 0, 1, Spinor.one(1))
    assert S.verify_conjugated_eigen(1, 0, 1, Spinor.one(1))
    assert S.verify_conjugated_eigen(2, 1, 1, basis_real("even", 1, 1))


def test_conjugated_eigen_rejects_bad_input():
    with pytest.raises(ValueError):
        S.verify_conjugated_eigen(1, 1, 1, Spinor.monomial(1, x=1, q=1))
    with pytest.raises(ValueError):
        S.verify_conjugated_eigen(1, 2, 1, basis_real("even", 1, 1))


def test_wrong_sign_fails():
    # flipping the eigenvalue sign breaks the identity
    from sympclif import oplib as O
    from sympclif.spinor import apply

    m = basis_real("even", 1, 1)
    gm = apply(S.laguerre_coeffs(1, 1, 1).as_operator(), m)
    lhs = apply(O.Ds(1), gm) - apply(O.Eshift(1, 1, 1), gm) * (I * ALPHA)
    assert lhs != gm * -S.eigenvalue(1, 1, 1)


def test_xs_power_oracles():
    assert S.xs_power_gaussian(0) == Spinor.one(1)
    assert S.xs_power_gaussian(1) == Spinor(1, {(1, 0, 1): I, (0, 1, 1): -1})
    S.xs_power_gaussian(4)


def test_exp_identity():
    assert S.exp_identity_truncated(0)
    assert S.exp_identity_truncated(1)
    assert S.exp_identity_truncated(6)


@given(st.integers(0, 8), st.integers(1, 2))
def test_commutator_power_identities(k, n):
    assert S.ds_xs_power_identity(k, n)
    assert S.euler_xs_power_identity(k, n)


def test_ds_exp():
    assert all(S.ds_exp_truncated(N) for N in range(5))


@given(st.integers(0, 8), st.integers(0, 5))
def test_q_degree(k, j):
    assert S.q_degree_growth(k, j) == k + j


def test_eigen_n2():
    for m in monogenics_by_nullspace(1, 1, 2)[:2]:
        assert S.verify_conjugated_eigen(2, 1, 2, m)
