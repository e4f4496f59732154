"""Eigenfunctions of D_s - c X_s as formal identities in the symbol alpha.

Every statement involving ``exp(alpha X_s)`` is compared coefficient-wise in
alpha up to a chosen order; nothing here exponentiates numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import ALPHA, I, ONE, Scalar
from .spinor import Spinor, apply
from .weyl import WeylElement, commutator
from . import oplib as O

__all__ = [
    "LaguerreOpPoly", "laguerre_coeffs", "laguerre_recursion_ok", "laguerre_explicit",
    "laguerre_rodrigues", "laguerre_scipy_check", "eigenvalue", "verify_conjugated_eigen",
    "xs_power_gaussian", "xs_power_closed_form", "exp_identity_truncated",
    "ds_xs_power_identity", "euler_xs_power_identity", "ds_exp_truncated", "q_degree_growth",
]


@dataclass(frozen=True)
class LaguerreOpPoly:
    """sum_l beta[l] X_s^l, normalized so beta[0] = 1."""

    j: int
    k: int
    n: int
    beta: tuple

    @property
    def parameter(self) -> int:
        return 2 * self.k + 2 * self.n - 1

    def as_operator(self) -> WeylElement:
        X = O.Xs(self.n)
        out = WeylElement.zero(self.n)
        power = WeylElement.scalar(self.n)
        for c in self.beta:
            out = out + power * c
            power = power * X
        return out

    def to_json(self) -> dict:
        return {"j": self.j, "k": self.k, "n": self.n, "parameter": self.parameter,
                "beta": [str(c) for c in self.beta]}


def laguerre_coeffs(j: int, k: int, n: int) -> LaguerreOpPoly:
    if j < 0 or k < 0 or n < 1:
        raise ValueError("need j, k >= 0 and n >= 1")
    b = 2 * k + 2 * n - 1
    beta = []
    for l in range(j + 1):
        c = Fraction(2 ** l * math.comb(j, l) * math.factorial(b), math.factorial(b + l))
        beta.append(Scalar.monomial(c, alpha=l))
    return LaguerreOpPoly(j, k, n, tuple(beta))


def laguerre_recursion_ok(p: LaguerreOpPoly) -> bool:
    """alpha (j - l) beta_l == (l + 1)/2 (2k + 2n + l) beta_(l+1) for all l < j."""
    for l in range(p.j):
        lhs = ALPHA * p.beta[l] * (p.j - l)
        rhs = p.beta[l + 1] * Scalar.gauss(Fraction((l + 1) * (2 * p.k + 2 * p.n + l), 2))
        if lhs != rhs:
            return False
    return True


def laguerre_explicit(j: int, beta: int) -> list:
    """Coefficients of L_j^beta from the explicit sum."""
    return [Fraction((-1) ** l * math.comb(j + beta, j - l), math.factorial(l)) for l in range(j + 1)]


def laguerre_rodrigues(j: int, beta: int) -> list:
    """Coefficients of x^(-beta) e^x / j! * d^j/dx^j (x^(j+beta) e^(-x)), by Leibniz."""
    out = [Fraction(0)] * (j + 1)
    for i in range(j + 1):
        # i derivatives on the power, j - i on the exponential
        c = math.comb(j, i) * math.perm(j + beta, i) * (-1) ** (j - i)
        out[j - i] += Fraction(c, math.factorial(j))
    return out


def laguerre_scipy_check(p: LaguerreOpPoly, alpha: float = 0.37, points=(-1.3, 0.4, 2.2)) -> bool:
    """sum_l beta_l u^l == L_j^b(-2 alpha u) / C(j + b, j) at sample points."""
    from scipy.special import eval_genlaguerre

    b = p.parameter
    for u in points:
        ours = sum(c.to_complex(alpha) * u ** l for l, c in enumerate(p.beta))
        ref = eval_genlaguerre(p.j, b, -2 * alpha * u) / math.comb(p.j + b, p.j)
        if abs(ours - ref) > 1e-10 * max(1.0, abs(ref)):
            return False
    return True


def eigenvalue(j: int, k: int, n: int) -> Scalar:
    """-i alpha (n + j + k)."""
    return Scalar.monomial(Scalar.gauss(0, -(n + j + k)), alpha=1)


def verify_conjugated_eigen(j: int, k: int, n: int, m: Spinor) -> bool:
    """D_s(g m) - i alpha (E + n)(g m) == lambda g m with g the Laguerre operator."""
    if m.n != n:
        raise ValueError("spinor dimension does not match n")
    if apply(O.Ds(n), m):
        raise ValueError("m is not monogenic")
    degs = m.base_degrees()
    if len(degs) > 1 or (degs and degs != {k}):
        raise ValueError(f"m is not homogeneous of degree {k}")
    gm = apply(laguerre_coeffs(j, k, n).as_operator(), m)
    shifted = apply(O.Eshift(n, 1, n), gm)
    lhs = apply(O.Ds(n), gm) - shifted * (I * ALPHA)
    return lhs == gm * eigenvalue(j, k, n)


def xs_power_closed_form(k: int) -> Spinor:
    """sum_m k! (ix - y)^(k-m) q^(k-2m) y^m / (m! (k-2m)! 2^m), times the Gaussian."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    lin = Spinor(1, {(1, 0, 0): I, (0, 1, 0): -ONE})
    out = Spinor.zero(1)
    for m in range(k // 2 + 1):
        c = Fraction(math.factorial(k), math.factorial(m) * math.factorial(k - 2 * m) * 2 ** m)
        term = Spinor.one(1)
        for _ in range(k - m):
            term = term.mul_poly(lin)
        term = term.mul_poly(Spinor(1, {(0, m, k - 2 * m): ONE}))
        out = out + term * Scalar.gauss(c)
    return out


def xs_power_gaussian(k: int) -> Spinor:
    """X_s^k applied to the Gaussian; checked against the closed form."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    X = O.Xs(1)
    s = Spinor.one(1)
    for _ in range(k):
        s = apply(X, s)
    if s != xs_power_closed_form(k):
        raise ArithmeticError(f"closed form disagrees with iteration at k={k}")
    return s


def exp_identity_truncated(N: int) -> bool:
    """exp(alpha X_s) G == G exp(alpha (ix - y)(2q + alpha y) / 2) to alpha-degree N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    X = O.Xs(1)
    left = Spinor.zero(1)
    s = Spinor.one(1)
    for k in range(N + 1):
        left = left + s * Scalar.monomial(Fraction(1, math.factorial(k)), alpha=k)
        s = apply(X, s)
    half = Scalar.gauss(Fraction(1, 2))
    # exponent P = alpha (ix - y) q + alpha^2 (ix - y) y / 2
    P = Spinor(1, {
        (1, 0, 1): I * ALPHA, (0, 1, 1): -ALPHA,
        (1, 1, 0): I * ALPHA * ALPHA * half, (0, 2, 0): -(ALPHA * ALPHA * half),
    })
    right = Spinor.zero(1)
    term = Spinor.one(1)
    for r in range(N + 1):
        right = right + term * Scalar.gauss(Fraction(1, math.factorial(r)))
        term = term.mul_poly(P).truncate_alpha(N)
    return left.truncate_alpha(N) == right.truncate_alpha(N)


def ds_xs_power_identity(k: int, n: int) -> bool:
    """[D_s, X_s^k] == -ik(k-1)/2 X_s^(k-1) - ik X_s^(k-1)(E + n)."""
    if k < 1:
        return commutator(O.Ds(n), WeylElement.scalar(n)) == WeylElement.zero(n)
    X = O.Xs(n)
    Xk1 = X ** (k - 1)
    rhs = Xk1 * Scalar.gauss(0, Fraction(-k * (k - 1), 2)) + Xk1 * O.Eshift(n, 1, n) * Scalar.gauss(0, -k)
    return commutator(O.Ds(n), Xk1 * X) == rhs


def euler_xs_power_identity(k: int, n: int) -> bool:
    """[E + n, X_s^k] == k X_s^k."""
    Xk = O.Xs(n) ** k
    return commutator(O.Eshift(n, 1, n), Xk) == Xk * k


def _exp_series(X: WeylElement, N: int) -> WeylElement:
    out = WeylElement.zero(X.n)
    power = WeylElement.scalar(X.n)
    for k in range(N + 1):
        out = out + power * Scalar.monomial(Fraction(1, math.factorial(k)), alpha=k)
        power = power * X
    return out


def ds_exp_truncated(N: int, n: int = 1) -> bool:
    """[D_s, exp(alpha X_s)] == -i alpha e (E+n) - i alpha^2/2 X_s e to alpha-degree N,
    with e = exp(alpha X_s)."""
    X, D = O.Xs(n), O.Ds(n)
    e = _exp_series(X, N)
    lhs = commutator(D, e).truncate_alpha(N)
    rhs = e * O.Eshift(n, 1, n) * (-(I * ALPHA)) + X * e * (-(I * ALPHA * ALPHA) / 2)
    return lhs == rhs.truncate_alpha(N)


def q_degree_growth(k: int, j: int) -> int:
    """deg_q of X_s^k (q^j G); the expected value is k + j."""
    X = O.Xs(1)
    s = Spinor(1, {(0, 0, j): ONE})
    for _ in range(k):
        s = apply(X, s)
    return s.q_degree()
