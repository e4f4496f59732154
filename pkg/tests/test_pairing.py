import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sympclif import pairing as P
from sympclif.bases import basis_complex_float, basis_complex_rescaled, basis_real, basis_sE, basis_sE_float
from sympclif.scalars import I, TAU, Scalar
from sympclif.spinor import Spinor, apply, grade
from sympclif import oplib as O

from conftest import spinors


def test_moments():
    assert P.gaussian_moment(0) == TAU
    assert P.gaussian_moment(1) == TAU / 2
    assert P.gaussian_moment(3) == TAU * Scalar.gauss(Fraction(15, 8))
    assert not P.moment(3)
    for t in range(5):
        assert math.isclose(P.gaussian_moment(t).to_complex().real, P.moment_quadrature(2 * t), rel_tol=1e-12)
    assert P.printed_moment(1) == TAU * Scalar.gauss(Fraction(3, 2))


def test_base_pairing_oracle():
    x2, y2, xy = (Spinor.monomial(1, x=2), Spinor.monomial(1, y=2), Spinor.monomial(1, x=1, y=1))
    assert P.fischer(x2, y2).value == TAU * 2
    assert P.fischer(xy, xy).value == -TAU


def test_fischer1_base_weight():
    # <z^r zbar^s, z^r zbar^s>_1 base factor r! s! / (r+s)!, fiber <dq G, G> = 0 so use q
    a = Spinor(1, {(1, 0, 0): 1, (0, 1, 0): I})  # z
    b = Spinor(1, {(1, 0, 1): 1, (0, 1, 1): I})  # z q
    # fiber: int d/dq(G) q G = -int q^2 e^{-q^2} = -t/2
    assert P.fischer1(a, b) == P.PairingValue(-TAU / 2, True)
    with pytest.raises(ValueError):
        P.fischer1(a + Spinor.one(1), b)


@given(spinors(max_terms=3), spinors(max_terms=3))
def test_fischer_swap_symmetry(a, b):
    # swapping arguments conjugates and picks up (-1)^(base degree) per homogeneous part
    ga, gb = grade(a), grade(b)
    swapped = Scalar()
    for h, part in ga.items():
        if h in gb:
            swapped = swapped + P.fischer(gb[h], part).value.conjugate() * (-1) ** h
    assert P.fischer(a, b).value == swapped


@given(spinors(max_terms=3), spinors(max_terms=3))
def test_fischer_float_matches_exact(a, b):
    fa = {k: complex(v) for k, v in a.terms.items()}
    fb = {k: complex(v) for k, v in b.terms.items()}
    exact = P.fischer(a, b).value.to_complex()
    assert abs(P.fischer_float(fa, fb) - exact) < 1e-8 * (1 + abs(exact))


def test_adjoint_relations():
    assert all(P.adjoint_table_check(samples=10).values())


def test_xs_adjoint_sign_is_negative():
    r = P.adjoint_table_check(samples=10, relations={"plain": (O.Xs, O.Ds, 1)})
    assert not r["plain"]


def test_kernels():
    assert P.kernel_K(0) == P.TwoPointKernel.constant(O.one(1))
    k1 = P.kernel_K(1)
    assert k1.terms == {(1, 0): -O.y(), (0, 1): O.x()}
    # the result stores (xi1, xi2) in the (x, y) slots: x^2 evaluates to xi1^2
    p = Spinor.monomial(1, x=2)
    assert P.kernel_pairing(P.kernel_K(2), p) == Spinor.monomial(1, x=2)
    p = Spinor.monomial(1, x=1, y=2)
    assert P.kernel_pairing(P.kernel_K(3), p) == p


def test_kernel_z_reproduces():
    from sympclif.bases import monogenics_by_nullspace

    for k in range(3):
        Z = P.kernel_Z(k)
        for m in monogenics_by_nullspace(k, 3):
            assert P.kernel_pairing(Z, m) == m


def test_isotropy_exact_small():
    for h in range(3):
        for k in range(3):
            a = basis_complex_rescaled("odd", h, k)[0]
            for l in range(3):
                b = basis_sE(h, l)[0]
                expected = TAU * 2 ** k if k == l else Scalar()
                assert P.fischer1(a, b) == P.PairingValue(expected, True)


def test_isotropy_float_small():
    for h in range(3):
        for k in range(3):
            for l in range(3):
                v = P.fischer1_float(basis_complex_float("odd", h, k), basis_sE_float(h, l))
                assert abs(v - (k == l)) < 1e-9


def test_odd_gram_h2_matches_closed_form():
    for k in range(4):
        for l in range(4):
            assert abs(P.odd_gram_float(2, k, l) - P.odd_gram_printed(2, k, l)) < 1e-9


def test_odd_gram_h3_corrected():
    # diagonal vanishes; |l-k| = 1 entries are -9 times the commonly printed ones
    assert not P.odd_gram_exact(3, 2, 2)
    assert P.odd_gram_exact(3, 1, 0) == Scalar.gauss(0, Fraction(384, 5))
    assert abs(P.odd_gram_printed(3, 1, 0) * -9 - P.odd_gram_exact(3, 1, 0).to_complex()) < 1e-12
    assert abs(P.odd_gram_printed(3, 0, 3) - P.odd_gram_exact(3, 0, 3).to_complex()) < 1e-12


def test_real_gram_frozen():
    t = P.real_gram_table("odd", "odd", 2, 3)
    assert t[(2, 2)] == TAU * Scalar.gauss(Fraction(-45, 4))
    assert t[(2, 3)] == TAU * Scalar.gauss(Fraction(-315, 8))
    assert not any(P.real_gram_table("odd", "even", 2, 3).values())


def test_pairing_value_json():
    v = P.PairingValue(TAU * 2, True)
    js = v.to_json()
    assert js["sqrt2"] is True and js["value"] == "(2)*t^1"
    assert math.isclose(v.to_complex().real, 2 * math.sqrt(2 * math.pi))
