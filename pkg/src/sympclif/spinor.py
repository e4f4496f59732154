"""Polynomial symplectic spinors: ``p(x, y, q) * exp(-|q|^2 / 2)``.

The Gaussian weight is never stored.  Multiplication generators act on the
polynomial part, ``dx``/``dy`` differentiate it, and ``dq`` acts through the
weight as ``p -> dp/dq - q p``.  Every operator used here maps this space to
itself, so the action is closed and exact.
"""
from __future__ import annotations

from collections import defaultdict

from .scalars import ONE, ZERO, Scalar, as_scalar
from .weyl import WeylElement

__all__ = ["Spinor", "apply", "apply_terms", "hermite_unnorm", "grade"]


class Spinor:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("dimension must be positive")
        self.n = n
        clean = {}
        if terms:
            for key, c in terms.items():
                if len(key) != 3 * n:
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
    def one(cls, n: int = 1) -> "Spinor":
        """The bare Gaussian."""
        return cls._raw(n, {(0,) * (3 * n): ONE})

    @classmethod
    def zero(cls, n: int = 1) -> "Spinor":
        return cls._raw(n, {})

    @classmethod
    def monomial(cls, n: int = 1, coeff=1, **exps) -> "Spinor":
        """``Spinor.monomial(1, x=1, q=2)`` is ``x q^2`` times the Gaussian."""
        key = [0] * (3 * n)
        for name, e in exps.items():
            kind, j = name[0], int(name[1:] or 1)
            key["xyq".index(kind) * n + j - 1] = e
        return cls(n, {tuple(key): coeff})

    def _check(self, other):
        if not isinstance(other, Spinor):
            raise TypeError("can only combine Spinors")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        other = self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Spinor._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Spinor._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def scale(self, factor) -> "Spinor":
        factor = factor if isinstance(factor, int) else as_scalar(factor)
        out = {}
        for k, c in self.terms.items():
            v = c * factor
            if v:
                out[k] = v
        return Spinor._raw(self.n, out)

    __mul__ = scale
    __rmul__ = scale

    def __truediv__(self, other):
        return self.scale(as_scalar(other).inverse())

    def __eq__(self, other):
        if isinstance(other, Spinor):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def mul_poly(self, other: "Spinor") -> "Spinor":
        """Product of polynomial parts (the weight is kept once)."""
        other = self._check(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return Spinor._raw(self.n, {k: c for k, c in out.items() if c})

    # -- grading ------------------------------------------------------------
    def base_degree(self, key) -> int:
        return sum(key[: 2 * self.n])

    def q_degree(self) -> int:
        n = self.n
        return max((sum(k[2 * n:]) for k in self.terms), default=-1)

    def base_degrees(self) -> set:
        return {self.base_degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.base_degrees()) <= 1

    def conjugate(self) -> "Spinor":
        return Spinor._raw(self.n, {k: c.conjugate() for k, c in self.terms.items()})

    def truncate_alpha(self, degree: int) -> "Spinor":
        out = {}
        for k, c in self.terms.items():
            c = c.truncate_alpha(degree)
            if c:
                out[k] = c
        return Spinor._raw(self.n, out)

    def to_complex_terms(self, alpha_value: complex = 0.0) -> dict:
        return {k: c.to_complex(alpha_value) for k, c in self.terms.items()}

    # -- text ---------------------------------------------------------------
    def monomial_str(self, key) -> str:
        n = self.n
        parts = []
        for block, kind in enumerate("xyq"):
            for j in range(n):
                e = key[block * n + j]
                if e:
                    name = kind if n == 1 else f"{kind}{j + 1}"
                    parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms)
        return " + ".join(f"[{self.terms[k]}]*{self.monomial_str(k)}" for k in keys)

    def __repr__(self):
        return f"Spinor(n={self.n}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exponents": list(k), "scalar": str(self.terms[k])} for k in sorted(self.terms)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Spinor":
        return cls(data["n"], {tuple(t["exponents"]): Scalar.parse(t["scalar"]) for t in data["terms"]})


# ---------------------------------------------------------------------------
# the action
# ---------------------------------------------------------------------------

def _derive(poly: dict, var: int, gaussian: bool) -> dict:
    """One derivative of a coefficient dict in slot ``var``.

    With ``gaussian`` set, the slot is a fiber variable and the weight
    contributes ``-q * p``.  Works for any coefficient ring supporting
    ``+``, unary ``-`` and multiplication by ``int``.
    """
    res: dict = {}
    for k, c in poly.items():
        e = k[var]
        if e:
            kk = k[:var] + (e - 1,) + k[var + 1:]
            v = c * e
            res[kk] = res[kk] + v if kk in res else v
        if gaussian:
            kk = k[:var] + (e + 1,) + k[var + 1:]
            v = -c
            res[kk] = res[kk] + v if kk in res else v
    return {k: c for k, c in res.items() if c}


def apply_terms(op: WeylElement, poly: dict, coerce=lambda c: c) -> dict:
    """Act with ``op`` on a raw coefficient dict; ``coerce`` maps the
    operator's Scalars into the dict's coefficient ring."""
    n = op.n
    h = 3 * n
    groups: dict = defaultdict(list)
    for key, c in op.terms.items():
        groups[key[h:]].append((key[:h], coerce(c)))
    cache = {(0,) * h: poly}

    def derived(d):
        if d in cache:
            return cache[d]
        # peel one derivative off the last nonzero slot
        i = max(j for j in range(h) if d[j])
        prev = d[:i] + (d[i] - 1,) + d[i + 1:]
        res = _derive(derived(prev), i, gaussian=i >= 2 * n)
        cache[d] = res
        return res

    out: dict = {}
    for d, mults in groups.items():
        base = derived(d)
        if not base:
            continue
        for m, c in mults:
            for k, v in base.items():
                kk = tuple(a + b for a, b in zip(k, m))
                val = c * v
                out[kk] = out[kk] + val if kk in out else val
    return {k: v for k, v in out.items() if v}


def apply(op: WeylElement, s: Spinor) -> Spinor:
    """Act with a Weyl element on a spinor."""
    if op.n != s.n:
        raise ValueError(f"dimension mismatch: operator n={op.n}, spinor n={s.n}")
    return Spinor._raw(s.n, apply_terms(op, s.terms))


def hermite_unnorm(k: int) -> Spinor:
    """``(q - dq)^k`` applied to the Gaussian; its polynomial part is H_k(q)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _hermite_cached(k)


_HERMITE: list = []


def _hermite_cached(k: int) -> Spinor:
    if not _HERMITE:
        _HERMITE.append(Spinor.one(1))
    while len(_HERMITE) <= k:
        prev = _HERMITE[-1].terms
        # (q - dq)(p G) = (2 q p - p') G
        nxt: dict = {}
        for (x, y, e), c in prev.items():
            key = (x, y, e + 1)
            nxt[key] = nxt.get(key, ZERO) + c * 2
            if e:
                key = (x, y, e - 1)
                nxt[key] = nxt.get(key, ZERO) - c * e
        _HERMITE.append(Spinor(1, nxt))
    return _HERMITE[k]


def grade(s: Spinor) -> dict:
    """Split by total degree in the base variables."""
    parts: dict = defaultdict(dict)
    for k, c in s.terms.items():
        parts[s.base_degree(k)][k] = c
    return {h: Spinor._raw(s.n, t) for h, t in sorted(parts.items())}
