"""Normal-ordered Weyl algebra in the generators x_j, y_j, q_j and their derivatives.

A monomial is an exponent tuple of length ``6n``::

    (x_1..x_n, y_1..y_n, q_1..q_n, dx_1..dx_n, dy_1..dy_n, dq_1..dq_n)

with every multiplication generator written to the left of every derivative.
Products are brought back to this form with the Leibniz rule, so two elements
are equal exactly when their term maps are equal.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = ["WeylElement", "gen", "commutator"]

_KINDS = ("x", "y", "q", "dx", "dy", "dq")


@lru_cache(maxsize=200_000)
def _leibniz(derivs: tuple, mults: tuple) -> tuple:
    """Expand ``d^derivs * m^mults`` into ``sum c * m^(mults-k) d^(derivs-k)``.

    Returns tuples ``(k, c)``; only variables where both exponents are
    positive contribute a choice.
    """
    active = [i for i, (a, c) in enumerate(zip(derivs, mults)) if a and c]
    if not active:
        return ((tuple(0 for _ in derivs), 1),)
    ranges = [range(min(derivs[i], mults[i]) + 1) for i in active]
    out = []
    for choice in product(*ranges):
        k = [0] * len(derivs)
        c = 1
        for i, ki in zip(active, choice):
            k[i] = ki
            a, m = derivs[i], mults[i]
            # comb(a, k) * m! / (m-k)!
            f = comb(a, ki)
            for t in range(ki):
                f *= m - t
            c *= f
        out.append((tuple(k), c))
    return tuple(out)


class WeylElement:
    """Sparse element of the Weyl algebra over :class:`Scalar`."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        clean = {}
        if terms:
            width = 6 * n
            for key, c in terms.items():
                if len(key) != width:
                    raise ValueError(f"monomial {key} has wrong length for n={n}")
                c = as_scalar(c)
                if c:
                    clean[tuple(key)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, n: int, value=1) -> "WeylElement":
        return cls(n, {(0,) * (6 * n): value})

    @classmethod
    def zero(cls, n: int) -> "WeylElement":
        return cls._raw(n, {})

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, WeylElement):
            return WeylElement.scalar(self.n, as_scalar(other))
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeylElement._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, factor) -> "WeylElement":
        factor = factor if isinstance(factor, int) else as_scalar(factor)
        if not factor:
            return WeylElement.zero(self.n)
        return WeylElement._raw(self.n, {k: c * factor for k, c in self.terms.items() if c * factor})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        other = self._check(other)
        h = 3 * self.n
        out: dict = {}
        for m1, c1 in self.terms.items():
            left, d1 = m1[:h], m1[h:]
            for m2, c2 in other.terms.items():
                mults, d2 = m2[:h], m2[h:]
                c12 = c1 * c2
                for k, f in _leibniz(d1, mults):
                    key = tuple(left[i] + mults[i] - k[i] for i in range(h)) + tuple(
                        d1[i] - k[i] + d2[i] for i in range(h)
                    )
                    val = c12 * f if f != 1 else c12
                    if key in out:
                        out[key] = out[key] + val
                    else:
                        out[key] = val
        return WeylElement._raw(self.n, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(as_scalar(other).inverse())

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = WeylElement.scalar(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == WeylElement.scalar(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------
    def order(self) -> int:
        """Total degree in all generators (the Bernstein filtration)."""
        return max((sum(k) for k in self.terms), default=-1)

    def derivative_order(self) -> int:
        h = 3 * self.n
        return max((sum(k[h:]) for k in self.terms), default=-1)

    def conjugate(self) -> "WeylElement":
        return WeylElement._raw(self.n, {k: c.conjugate() for k, c in self.terms.items()})

    def truncate_alpha(self, degree: int) -> "WeylElement":
        out = {}
        for k, c in self.terms.items():
            c = c.truncate_alpha(degree)
            if c:
                out[k] = c
        return WeylElement._raw(self.n, out)

    def coefficient(self, key) -> Scalar:
        return self.terms.get(tuple(key), ZERO)

    # -- text ---------------------------------------------------------------
    def monomial_str(self, key) -> str:
        n = self.n
        parts = []
        for block, kind in enumerate(_KINDS):
            for j in range(n):
                e = key[block * n + j]
                if e:
                    name = kind if n == 1 else f"{kind}{j + 1}"
                    parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (sum(k), k))
        return " + ".join(f"[{self.terms[k]}]*{self.monomial_str(k)}" for k in keys)

    def __repr__(self):
        return f"WeylElement(n={self.n}, {self})"

    def to_json(self) -> dict:
        keys = sorted(self.terms, key=lambda k: (sum(k), k))
        return {
            "n": self.n,
            "terms": [{"exponents": list(k), "scalar": str(self.terms[k])} for k in keys],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeylElement":
        return cls(data["n"], {tuple(t["exponents"]): Scalar.parse(t["scalar"]) for t in data["terms"]})


def gen(kind: str, j: int = 1, n: int = 1) -> WeylElement:
    """Single generator, e.g. ``gen("dq", 2, n=3)`` for the derivative in q_2."""
    if kind not in _KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range for n={n}")
    key = [0] * (6 * n)
    key[_KINDS.index(kind) * n + j - 1] = 1
    return WeylElement._raw(n, {tuple(key): ONE})


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return a * b - b * a
