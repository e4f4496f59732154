"""Monogenic bases for n = 1 in real and complex coordinates.

The complex-coordinate family is built from normalized Hermite functions,
whose normalization involves ``pi**(1/4)`` and square roots of double
factorials.  Exact constructors return a rescaled representative built from
the unnormalized Hermite spinors ``h_m``; :class:`Rescale` records the
positive factor relating it to the normalized element.  A separate float
path builds the normalized element directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np
from numpy.polynomial import hermite

from .linalg import nullspace
from .scalars import I, ONE, Scalar
from .spinor import Spinor, apply, hermite_unnorm
from .oplib import Ds

__all__ = [
    "Rescale", "basis_real", "basis_complex_rescaled", "basis_sE", "basis_complex_float",
    "basis_sE_float", "monogenics_by_nullspace", "double_factorial", "z_power", "zbar_power",
    "ACTION_TABLE", "action_table_check", "action_table_check_float", "rescale_factor",
]


def double_factorial(m: int) -> int:
    """m!! with the conventions (-1)!! = 0!! = 1."""
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@dataclass(frozen=True)
class Rescale:
    """The factor ``rational * sqrt(2)**sqrt2 * pi**(1/4)`` with
    ``exact = factor * normalized``."""

    rational: Fraction
    sqrt2: bool = False

    def to_float(self) -> float:
        return float(self.rational) * (math.sqrt(2) if self.sqrt2 else 1.0) * math.pi ** 0.25

    def __str__(self):
        r = self.rational
        r = str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
        return f"{r}*sqrt(2)*pi^(1/4)" if self.sqrt2 else f"{r}*pi^(1/4)"

    def to_json(self) -> dict:
        return {"rational": str(self.rational), "sqrt2": self.sqrt2, "pi_quarter": 1,
                "float": self.to_float()}


def _pow2(k: int) -> Fraction:
    return Fraction(2) ** k


# -- polynomial helpers (n = 1) -------------------------------------------------

@lru_cache(maxsize=None)
def z_power(p: int) -> Spinor:
    """(x + i y)^p as a spinor with no fiber part."""
    out = Spinor.one(1)
    z = Spinor(1, {(1, 0, 0): ONE, (0, 1, 0): I})
    for _ in range(p):
        out = out.mul_poly(z)
    return out


@lru_cache(maxsize=None)
def zbar_power(p: int) -> Spinor:
    out = Spinor.one(1)
    zb = Spinor(1, {(1, 0, 0): ONE, (0, 1, 0): -I})
    for _ in range(p):
        out = out.mul_poly(zb)
    return out


def _iy_power(p: int) -> Spinor:
    return Spinor(1, {(0, p, 0): I ** p})


def _q_power(e: int) -> Spinor:
    return Spinor(1, {(0, 0, e): ONE})


# -- real coordinates -------------------------------------------------------------

def basis_real(parity: str, h: int, k: int) -> Spinor:
    """Real-coordinate family: odd needs k >= h, even needs k >= 0.

    For even elements the ratio (2k)!!/(2k-2p)!! is read as the falling
    factorial 2^p k!/(k-p)!, so terms with p > k vanish.
    """
    if h < 0:
        raise ValueError("h must be nonnegative")
    out = Spinor.zero(1)
    if parity == "odd":
        if k < h:
            raise ValueError(f"odd real family needs k >= h (got h={h}, k={k})")
        for p in range(h + 1):
            c = (-1) ** p * Fraction(double_factorial(2 * k + 1), double_factorial(2 * k - 2 * p + 1))
            c *= math.comb(h, p)
            term = _q_power(2 * k + 1 - 2 * p).mul_poly(z_power(h - p)).mul_poly(_iy_power(p))
            out = out + term * Scalar.gauss(c)
        return out
    if parity == "even":
        if k < 0:
            raise ValueError(f"even real family needs k >= 0 (got {k})")
        for p in range(min(h, k) + 1):
            c = (-1) ** p * 2 ** p * math.perm(k, p) * math.comb(h, p)
            term = _q_power(2 * k - 2 * p).mul_poly(z_power(h - p)).mul_poly(_iy_power(p))
            out = out + term * c
        return out
    raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


# -- complex coordinates -------------------------------------------------------------

def _check_complex(parity: str, h: int, k: int):
    if h < 0:
        raise ValueError("h must be nonnegative")
    if parity == "odd":
        if k < 0:
            raise ValueError(f"odd complex family needs k >= 0 (got {k})")
    elif parity == "even":
        if k < -h:
            raise ValueError(f"even complex family needs k >= -h (got h={h}, k={k})")
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")


def rescale_factor(parity: str, k: int) -> Rescale:
    if parity == "odd":
        return Rescale(_pow2(k), sqrt2=True)
    return Rescale(_pow2(k))


@lru_cache(maxsize=None)
def _complex_cached(parity: str, h: int, k: int) -> Spinor:
    shift = 1 if parity == "odd" else 0
    out = Spinor.zero(1)
    for p in range(max(0, -k), h + 1):
        m = 2 * k + 2 * p + shift
        c = Fraction(math.comb(h, p), double_factorial(m) * 2 ** p)
        term = hermite_unnorm(m).mul_poly(zbar_power(h - p)).mul_poly(z_power(p))
        out = out + term * Scalar.gauss(c)
    return out


def basis_complex_rescaled(parity: str, h: int, k: int) -> tuple:
    """Exact representative and its :class:`Rescale` factor."""
    _check_complex(parity, h, k)
    return _complex_cached(parity, h, k), rescale_factor(parity, k)


@lru_cache(maxsize=None)
def _sE_cached(h: int, l: int) -> Spinor:
    out = Spinor.zero(1)
    for j in range(l + 1):
        out = out + _complex_cached("even", h, j) * Scalar.gauss(Fraction(1, 2 ** (h + j)))
    return out


def basis_sE(h: int, l: int) -> tuple:
    """Exact representative of the normalized sum over even elements j = 0..l."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    if h < 0:
        raise ValueError("h must be nonnegative")
    return _sE_cached(h, l), Rescale(Fraction(1))


# -- float path ------------------------------------------------------------------------

def _hermite_function_coeffs(m: int) -> np.ndarray:
    """Power-basis coefficients of the normalized m-th Hermite function's polynomial part."""
    c = np.zeros(m + 1)
    c[m] = 1.0
    poly = hermite.herm2poly(c)
    return poly / math.sqrt(2.0 ** m * math.factorial(m) * math.sqrt(math.pi))


def _float_poly(s: Spinor) -> dict:
    return {k: complex(v) for k, v in s.terms.items()}


def basis_complex_float(parity: str, h: int, k: int) -> dict:
    """Normalized element as ``{(x, y, q) exponents: complex}`` built in floats."""
    _check_complex(parity, h, k)
    shift = 1 if parity == "odd" else 0
    out: dict = {}
    for p in range(max(0, -k), h + 1):
        m = 2 * k + 2 * p + shift
        # both parities carry sqrt((m-1)!!/m!!)
        w = math.sqrt(double_factorial(m - 1) / double_factorial(m)) * math.comb(h, p)
        herm = _hermite_function_coeffs(m)
        base = _float_poly(zbar_power(h - p).mul_poly(z_power(p)))
        for e, hc in enumerate(herm):
            if hc == 0.0:
                continue
            for (a, b, _), bc in base.items():
                key = (a, b, e)
                out[key] = out.get(key, 0j) + w * hc * bc
    return out


def basis_sE_float(h: int, l: int) -> dict:
    out: dict = {}
    for j in range(l + 1):
        for key, v in basis_complex_float("even", h, j).items():
            out[key] = out.get(key, 0j) + v / 2 ** h
    return out


# -- nullspace oracle ---------------------------------------------------------------------

def _monomials(nvars: int, degree: int):
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def monogenics_by_nullspace(h: int, Q: int, n: int = 1) -> list:
    """Exact basis of the D_s-kernel on {base degree h, fiber degree <= Q}.

    D_s maps this space into fiber degree <= Q + 1, and the matrix is built on
    that whole codomain, so no truncation boundary can fake a solution; each
    returned element is re-checked by direct application.
    """
    if Q < 0 or h < 0:
        raise ValueError("h and Q must be nonnegative")
    base = list(_monomials(2 * n, h))
    fiber = [e for d in range(Q + 1) for e in _monomials(n, d)]
    domain = [b + f for b in base for f in fiber]
    op = Ds(n)
    images = [apply(op, Spinor._raw(n, {key: ONE})) for key in domain]
    rows_index: dict = {}
    eqs: dict = {}
    for col, img in enumerate(images):
        for key, c in img.terms.items():
            r = rows_index.setdefault(key, len(rows_index))
            eqs.setdefault(r, {})[col] = c
    basis = nullspace([eqs[r] for r in sorted(eqs)], len(domain))
    out = []
    for vec in basis:
        s = Spinor(n, {domain[i]: v for i, v in enumerate(vec) if v})
        if apply(op, s):
            raise ArithmeticError("nullspace vector failed the kernel certificate")
        out.append(s)
    return out


# -- action tables ---------------------------------------------------------------------------

def _g(re, im=0) -> Scalar:
    return Scalar.gauss(re, im)


# (operator name, parity) -> (h, k) -> (eigen-coefficient, dh, dk) on normalized elements
ACTION_TABLE = {
    ("dz", "even"): lambda h, k: (_g(h), -1, 1),
    ("dzbar", "even"): lambda h, k: (_g(h) if k != -h else _g(0), -1, 0),
    ("Ht", "even"): lambda h, k: (_g(Fraction(2 * h + 4 * k + 1, 2)), 0, 0),
    ("Xt", "even"): lambda h, k: (_g(0, h + k + 1), 0, 1),
    ("Yt", "even"): lambda h, k: (_g(0, Fraction(2 * k - 1, 2)) if k != -h else _g(0), 0, -1),
    ("Z1", "even"): lambda h, k: (_g(2 * (h + 1) * (h + k + 1)), 1, 0),
    ("Z2", "even"): lambda h, k: (_g((h + 1) * (2 * k - 1)), 1, -1),
    ("dz", "odd"): lambda h, k: (_g(h), -1, 1),
    ("dzbar", "odd"): lambda h, k: (_g(h), -1, 0),
    ("Ht", "odd"): lambda h, k: (_g(Fraction(2 * h + 4 * k + 3, 2)), 0, 0),
    ("Xt", "odd"): lambda h, k: (_g(0, Fraction(2 * h + 2 * k + 3, 2)), 0, 1),
    ("Yt", "odd"): lambda h, k: (_g(0, k), 0, -1),
    ("Z1", "odd"): lambda h, k: (_g((1 + h) * (2 * h + 2 * k + 3)), 1, 0),
    ("Z2", "odd"): lambda h, k: (_g(2 * (h + 1) * k), 1, -1),
}


def _table_op(name: str):
    from . import oplib as O

    return {
        "dz": O.dz, "dzbar": O.dzbar, "Ht": O.Ht, "Xt": O.Xt, "Yt": O.Yt,
        "Z1": lambda: O.Z_complex(1), "Z2": lambda: O.Z_complex(2),
    }[name]()


def _valid(parity: str, h: int, k: int) -> bool:
    if h < 0:
        return False
    return k >= 0 if parity == "odd" else k >= -h


def _table_indices(parity: str, hmax: int, kmax: int):
    for h in range(hmax + 1):
        lo = 0 if parity == "odd" else max(-h, -kmax)
        for k in range(lo, kmax + 1):
            yield h, k


def action_table_check(hmax: int = 4, kmax: int = 5, entries=None) -> dict:
    """Exact check on rescaled representatives.

    With ``exact = f * normalized`` and ``op(s_src) = lam * s_dst`` the
    rescaled image must be ``lam * f_src / f_dst`` times the rescaled target.
    The two factors share their irrational part, so the ratio is rational.
    Returns ``{(name, parity): [failing (h, k)]}``.
    """
    report = {}
    for key in entries or ACTION_TABLE:
        name, parity = key
        rule = ACTION_TABLE[key]
        op = _table_op(name)
        fails = []
        for h, k in _table_indices(parity, hmax, kmax):
            src, fs = basis_complex_rescaled(parity, h, k)
            lam, dh, dk = rule(h, k)
            img = apply(op, src)
            if _valid(parity, h + dh, k + dk):
                dst, fd = basis_complex_rescaled(parity, h + dh, k + dk)
                pred = dst * (lam * Scalar.gauss(fs.rational / fd.rational))
            else:
                pred = Spinor.zero(1)
            if img != pred:
                fails.append((h, k))
        report[key] = fails
    return report


def _float_dist(a: dict, b: dict) -> float:
    keys = set(a) | set(b)
    scale = max([abs(v) for v in b.values()] + [1.0])
    return max((abs(a.get(k, 0j) - b.get(k, 0j)) for k in keys), default=0.0) / scale


def action_table_check_float(hmax: int = 4, kmax: int = 5, tol: float = 1e-9, entries=None) -> dict:
    """Same tables on normalized float elements, relative tolerance ``tol``."""
    from .spinor import apply_terms

    report = {}
    for key in entries or ACTION_TABLE:
        name, parity = key
        rule = ACTION_TABLE[key]
        op = _table_op(name)
        fails = []
        for h, k in _table_indices(parity, hmax, kmax):
            src = basis_complex_float(parity, h, k)
            lam, dh, dk = rule(h, k)
            img = apply_terms(op, src, lambda c: c.to_complex())
            if _valid(parity, h + dh, k + dk):
                lc = lam.to_complex()
                pred = {kk: lc * v for kk, v in basis_complex_float(parity, h + dh, k + dk).items()}
            else:
                pred = {}
            if _float_dist(img, pred) > tol:
                fails.append((h, k))
        report[key] = fails
    return report
