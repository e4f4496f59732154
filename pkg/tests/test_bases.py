import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sympclif import bases as B
from sympclif.oplib import Ds
from sympclif.scalars import I, Scalar
from sympclif.spinor import Spinor, apply


def test_double_factorial():
    assert [B.double_factorial(m) for m in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]
    with pytest.raises(ValueError):
        B.double_factorial(-2)


def test_real_odd_oracle():
    # h = 1, k = 1: 3!!/3!! q^3 z - 3!!/1!! q iy
    s = B.basis_real("odd", 1, 1)
    assert s == Spinor(1, {(1, 0, 3): 1, (0, 1, 3): I, (0, 1, 1): -3 * I})


def test_real_even_falling_factorial():
    # p > k terms vanish: h = 2, k = 0 is just z^2
    s = B.basis_real("even", 2, 0)
    assert s == B.z_power(2)


def test_index_ranges():
    with pytest.raises(ValueError):
        B.basis_real("odd", 2, 1)
    with pytest.raises(ValueError):
        B.basis_complex_rescaled("even", 2, -3)
    with pytest.raises(ValueError):
        B.basis_complex_rescaled("odd", 1, -1)


def test_rescale_factor():
    f = B.rescale_factor("odd", 2)
    assert f.rational == 4 and f.sqrt2
    assert math.isclose(f.to_float(), 4 * math.sqrt(2) * math.pi ** 0.25)
    assert str(f) == "4*sqrt(2)*pi^(1/4)"


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_float_matches_rescaled(parity):
    for h in range(3):
        for k in range(0 if parity == "odd" else -h, 3):
            s, f = B.basis_complex_rescaled(parity, h, k)
            fl = B.basis_complex_float(parity, h, k)
            scale = f.to_float()
            for key in set(s.terms) | set(fl):
                exact = s.terms[key].to_complex() if key in s.terms else 0
                assert abs(exact - scale * fl.get(key, 0)) < 1e-9 * max(1, abs(exact))


@given(st.integers(0, 6), st.integers(-6, 8))
def test_complex_even_in_kernel(h, k):
    if k < -h:
        return
    assert not apply(Ds(1), B.basis_complex_rescaled("even", h, k)[0])


@given(st.integers(0, 6), st.integers(0, 8))
def test_complex_odd_and_sE_in_kernel(h, k):
    assert not apply(Ds(1), B.basis_complex_rescaled("odd", h, k)[0])
    assert not apply(Ds(1), B.basis_sE(h, k)[0])


@given(st.integers(0, 5), st.integers(0, 8))
def test_real_in_kernel(h, k):
    assert not apply(Ds(1), B.basis_real("even", h, k))
    if k >= h:
        assert not apply(Ds(1), B.basis_real("odd", h, k))


def test_nullspace_dimensions():
    assert [len(B.monogenics_by_nullspace(h, 9)) for h in (1, 2, 3)] == [9, 8, 7]
    assert len(B.monogenics_by_nullspace(1, 4, n=2)) == 39


def test_action_tables():
    assert not any(B.action_table_check(3, 4).values())
    assert not any(B.action_table_check_float(3, 4).values())


def test_action_table_oracle():
    # Z1 s_{o,0}^0 = 3 s_{o,0}^1
    lam, dh, dk = B.ACTION_TABLE[("Z1", "odd")](0, 0)
    assert (lam, dh, dk) == (Scalar.gauss(3), 1, 0)
    # H_t s_{e,k}^h = (h + 2k + 1/2) s_{e,k}^h
    lam, _, _ = B.ACTION_TABLE[("Ht", "even")](2, -1)
    assert lam == Scalar.gauss(Fraction(1, 2))
