"""Named operators: the sl(2) triple, the metaplectic generators, the
homogeneity-raising Z operators, complex-coordinate forms and projectors.

Complex coordinates are not separate generators.  ``z = x + i y`` and
``dz = (dx - i dy) / 2`` are formed as combinations of the real generators,
so every operator lives in one canonical algebra.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .scalars import I, ONE, Scalar
from .spinor import Spinor, apply
from .weyl import WeylElement, gen

__all__ = [
    "build", "OP_NAMES", "Ds", "Xs", "E", "Eshift", "x", "y", "q", "dx", "dy", "dq",
    "sp_generator", "sp_matrix", "sp_basis", "sp_coordinates", "sp_operator", "z", "zbar", "dz", "dzbar", "Z_general",
    "projector_P", "proj_sm", "proj_sm_coeffs", "clifford_mul", "clifford_e",
]

HALF = Scalar.gauss(Fraction(1, 2))


def x(j=1, n=1):
    return gen("x", j, n)


def y(j=1, n=1):
    return gen("y", j, n)


def q(j=1, n=1):
    return gen("q", j, n)


def dx(j=1, n=1):
    return gen("dx", j, n)


def dy(j=1, n=1):
    return gen("dy", j, n)


def dq(j=1, n=1):
    return gen("dq", j, n)


def one(n=1, value=1):
    return WeylElement.scalar(n, value)


def Xs(n=1) -> WeylElement:
    return sum((y(j, n) * dq(j, n) + x(j, n) * q(j, n) * I for j in range(1, n + 1)), WeylElement.zero(n))


def Ds(n=1) -> WeylElement:
    return sum((q(j, n) * dy(j, n) * I - dx(j, n) * dq(j, n) for j in range(1, n + 1)), WeylElement.zero(n))


def E(n=1) -> WeylElement:
    return sum((x(j, n) * dx(j, n) + y(j, n) * dy(j, n) for j in range(1, n + 1)), WeylElement.zero(n))


def Eshift(n=1, a=1, b=0) -> WeylElement:
    """``a*E + b`` (used for the factors E+n and 2E+2n-1)."""
    return E(n) * a + one(n, b)


# -- metaplectic generators --------------------------------------------------

def sp_generator(kind: str, j: int, k: int, n: int) -> WeylElement:
    """Generators X_jk, Y_jk, Z_jk acting on spinor-valued polynomials."""
    if not (1 <= j <= n and 1 <= k <= n):
        raise ValueError(f"indices ({j},{k}) out of range for n={n}")
    if kind == "X":
        op = -x(j, n) * dx(k, n) + y(k, n) * dy(j, n) + q(k, n) * dq(j, n)
        return op + one(n, HALF) if j == k else op
    if kind == "Y":
        if j == k:
            return -x(j, n) * dy(j, n) - dq(j, n) * dq(j, n) * (I * HALF)
        return x(k, n) * dy(j, n) + x(j, n) * dy(k, n) + dq(j, n) * dq(k, n) * I
    if kind == "Z":
        if j == k:
            return -y(j, n) * dx(j, n) - q(j, n) * q(j, n) * (I * HALF)
        return y(k, n) * dx(j, n) + y(j, n) * dx(k, n) + q(j, n) * q(k, n) * I
    raise ValueError(f"unknown generator kind {kind!r}")


def sp_matrix(kind: str, j: int, k: int, n: int):
    """The 2n x 2n matrix realization of the same basis element (list of lists)."""
    m = [[0] * (2 * n) for _ in range(2 * n)]
    j0, k0 = j - 1, k - 1
    if kind == "X":
        m[j0][k0] += 1
        m[n + k0][n + j0] -= 1
    elif kind == "Y":
        # the off-diagonal operators carry the opposite sign to the diagonal ones
        if j == k:
            m[j0][n + k0] += 1
        else:
            m[j0][n + k0] -= 1
            m[k0][n + j0] -= 1
    elif kind == "Z":
        if j == k:
            m[n + j0][k0] += 1
        else:
            m[n + j0][k0] -= 1
            m[n + k0][j0] -= 1
    else:
        raise ValueError(kind)
    return m


def sp_coordinates(m, n: int) -> dict:
    """Coordinates of an sp(2n) matrix in the basis of :func:`sp_matrix`."""
    out = {}
    for kind, j, k in sp_basis(n):
        j0, k0 = j - 1, k - 1
        if kind == "X":
            c = m[j0][k0]
        elif kind == "Y":
            c = m[j0][n + k0] if j == k else -m[j0][n + k0]
        else:
            c = m[n + j0][k0] if j == k else -m[n + j0][k0]
        if c:
            out[(kind, j, k)] = c
    return out


def sp_operator(m, n: int) -> WeylElement:
    """Linear extension of the generator map to an sp(2n) matrix."""
    out = WeylElement.zero(n)
    for (kind, j, k), c in sp_coordinates(m, n).items():
        out = out + sp_generator(kind, j, k, n) * c
    return out


def sp_basis(n: int) -> list:
    """(kind, j, k) labels of a basis of sp(2n): all X_jk, and Y/Z with j <= k."""
    out = [("X", j, k) for j in range(1, n + 1) for k in range(1, n + 1)]
    for kind in ("Y", "Z"):
        out += [(kind, j, k) for j in range(1, n + 1) for k in range(j, n + 1)]
    return out


def Htilde():
    return -x() * dx() + y() * dy() + q() * dq() + one(1, HALF)


def Xtilde():
    return -y() * dx() - q() * q() * (I * HALF)


def Ytilde():
    return -x() * dy() - dq() * dq() * (I * HALF)


# -- complex coordinates (n = 1) ----------------------------------------------

def z():
    return x() + y() * I


def zbar():
    return x() - y() * I


def dz():
    return (dx() - dy() * I) * HALF


def dzbar():
    return (dx() + dy() * I) * HALF


def Ht():
    return zbar() * dzbar() - z() * dz() + (q() * q() - dq() * dq()) * HALF


def Xt():
    qm = q() - dq()
    return zbar() * dz() * I + qm * qm * (I * Scalar.gauss(Fraction(1, 4)))


def Yt():
    qp = q() + dq()
    return -z() * dzbar() * I + qp * qp * (I * Scalar.gauss(Fraction(1, 4)))


# -- homogeneity raising operators ---------------------------------------------

def Z_general(l: int, n: int) -> WeylElement:
    """The operator Z_l, l = 1..2n, mapping monogenics of degree h to h+1."""
    if not 1 <= l <= 2 * n:
        raise ValueError(f"Z index {l} out of range for n={n}")
    X = Xs(n)
    En = Eshift(n, 1, n)
    E2 = Eshift(n, 2, 2 * n - 1)
    if l <= n:
        j = l
        return X * X * dx(j, n) - y(j, n) * En * E2 * I - X * q(j, n) * E2 * I
    j = l - n
    return X * X * dy(j, n) + x(j, n) * En * E2 * I - X * dq(j, n) * E2


def Z_real(l: int) -> WeylElement:
    """Real-coordinate pair for n = 1 (the negatives of Z_general(l, 1))."""
    X, En, E2 = Xs(), Eshift(1, 1, 1), Eshift(1, 2, 1)
    if l == 1:
        return -X * X * dx() + y() * En * E2 * I + X * q() * I * E2
    if l == 2:
        return -X * X * dy() - x() * En * E2 * I + X * dq() * E2
    raise ValueError(f"Z index {l} out of range for n=1")


def Z_complex(l: int) -> WeylElement:
    """Complex-coordinate pair for n = 1, expanded into x, y."""
    X, En, E2 = Xs(), Eshift(1, 1, 1), Eshift(1, 2, 1)
    if l == 1:
        return X * X * dz() * 2 + zbar() * En * E2 + X * (dq() - q()) * E2 * I
    if l == 2:
        return X * X * dzbar() * 2 - z() * En * E2 - X * (dq() + q()) * E2 * I
    raise ValueError(f"Z index {l} out of range for n=1")


# -- Clifford action -----------------------------------------------------------

def clifford_e(j: int, n: int = 1) -> WeylElement:
    """e_j acts as i q_j, e_{n+j} as dq_j."""
    if 1 <= j <= n:
        return q(j, n) * I
    if n < j <= 2 * n:
        return dq(j - n, n)
    raise ValueError(f"Clifford index {j} out of range for n={n}")


def clifford_mul(j: int, s: Spinor) -> Spinor:
    return apply(clifford_e(j, s.n), s)


# -- projectors ----------------------------------------------------------------

def projector_P(h: int, n: int = 1) -> WeylElement:
    """Projection of x_l m, y_l m (m monogenic of degree h) onto degree h+1 monogenics."""
    if h + n < 1:
        raise ValueError("need h + n >= 1")
    c = Scalar.gauss(Fraction(1, h + n)) / I
    d = Scalar.gauss(Fraction(-1, (h + n) * (2 * h + 2 * n - 1)))
    X, D = Xs(n), Ds(n)
    return one(n) + X * D * c + X * X * D * D * d


def _dx_factor(l: int, h: int, n: int) -> Scalar:
    """D_s X_s^l m = factor * X_s^(l-1) m for m monogenic of degree h."""
    return Scalar.gauss(0, Fraction(-l * (2 * h + 2 * n + l - 1), 2))


def proj_sm_coeffs(k: int, n: int = 1) -> list:
    """Coefficients a_0..a_k of the projector sum_j a_j X_s^j D_s^j onto monogenics."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    a = [ONE]
    for l in range(1, k + 1):
        h = k - l
        # sum_j a_j prod_{t<j} c(l-t, h) = 0, triangular in a_l
        total = Scalar()
        prod = ONE
        for j in range(l):
            total = total + a[j] * prod
            prod = prod * _dx_factor(l - j, h, n)
        if not prod:
            raise ArithmeticError(f"singular projector system at k={k}, l={l}")
        a.append(-total / prod)
    return a


def proj_sm(k: int, n: int = 1) -> WeylElement:
    X, D = Xs(n), Ds(n)
    out = WeylElement.zero(n)
    for j, c in enumerate(proj_sm_coeffs(k, n)):
        out = out + (X**j) * (D**j) * c
    return out


# -- the name table --------------------------------------------------------------

def _n1(fn):
    def wrapped(n):
        if n != 1:
            raise ValueError("complex-coordinate and n=1 operators require n=1")
        return fn()
    return wrapped


_FIXED = {
    "Ds": Ds,
    "Xs": Xs,
    "E": E,
    "Htilde": _n1(Htilde),
    "Xtilde": _n1(Xtilde),
    "Ytilde": _n1(Ytilde),
    "Ht": _n1(Ht),
    "Xt": _n1(Xt),
    "Yt": _n1(Yt),
    "Z1": _n1(lambda: Z_complex(1)),
    "Z2": _n1(lambda: Z_complex(2)),
    "Zr1": _n1(lambda: Z_real(1)),
    "Zr2": _n1(lambda: Z_real(2)),
    "Dz": _n1(dz),
    "Dzbar": _n1(dzbar),
    "z": _n1(z),
    "zbar": _n1(zbar),
}

OP_NAMES = sorted(_FIXED) + ["X<jk>", "Y<jk>", "Z<jk>", "Z_<l>", "Dx<j>", "Dy<j>", "e<j>"]

_PATTERNS = [
    (re.compile(r"([XYZ])(\d)(\d)$"), lambda m, n: sp_generator(m[1], int(m[2]), int(m[3]), n)),
    (re.compile(r"Z_(\d+)$"), lambda m, n: Z_general(int(m[1]), n)),
    (re.compile(r"Dx(\d+)$"), lambda m, n: dx(int(m[1]), n)),
    (re.compile(r"Dy(\d+)$"), lambda m, n: dy(int(m[1]), n)),
    (re.compile(r"e(\d+)$"), lambda m, n: clifford_e(int(m[1]), n)),
]


def is_op_name(name: str) -> bool:
    return name in _FIXED or any(p.match(name) for p, _ in _PATTERNS)


def build(name: str, n: int = 1) -> WeylElement:
    """Look up a named operator in dimension ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    if name in _FIXED:
        return _FIXED[name](n)
    for pat, fn in _PATTERNS:
        m = pat.match(name)
        if m:
            return fn(m, n)
    raise KeyError(f"unknown operator name {name!r}")
