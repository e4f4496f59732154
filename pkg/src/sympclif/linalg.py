"""Exact sparse linear algebra over the Gaussian rationals.

Forward elimination is fraction-free: rows are scaled to Gaussian integers and
combined by cross-multiplication, with the integer content divided out after
each step.  Only the final reduced echelon form uses rationals.
"""
from __future__ import annotations

from math import gcd, lcm

from .scalars import Scalar, as_scalar, mpq

__all__ = ["Echelon", "nullspace", "rank", "solve", "in_span", "vectorize"]


def _to_gauss_int_row(row: dict) -> dict:
    den = 1
    vals = {}
    for col, v in row.items():
        v = as_scalar(v)
        if not v:
            continue
        if not v.is_constant():
            raise ValueError("linear algebra is over Q(i) only; found symbolic entry")
        re, im = v.constant()
        vals[col] = (re, im)
        den = lcm(den, int(re.denominator), int(im.denominator))
    return {c: (int(re * den), int(im * den)) for c, (re, im) in vals.items()}


def _primitive(row: dict) -> dict:
    g = 0
    for re, im in row.values():
        g = gcd(g, re, im)
        if g == 1:
            return row
    if g > 1:
        return {c: (re // g, im // g) for c, (re, im) in row.items()}
    return row


def _combine(row: dict, piv: dict, col: int) -> dict:
    """``p * row - r * piv`` with p = piv[col], r = row[col]; kills ``col``."""
    pr, pi = piv[col]
    rr, ri = row[col]
    out = {}
    for c, (a, b) in row.items():
        out[c] = (pr * a - pi * b, pr * b + pi * a)
    for c, (a, b) in piv.items():
        x, y = rr * a - ri * b, rr * b + ri * a
        if c in out:
            u, v = out[c]
            out[c] = (u - x, v - y)
        else:
            out[c] = (-x, -y)
    return _primitive({c: v for c, v in out.items() if v[0] or v[1]})


class Echelon:
    """Incremental row echelon form; rows are sparse ``{col: value}`` dicts."""

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, row: dict) -> dict:
        row = _to_gauss_int_row(row) if row and not _is_int_row(row) else row
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            row = _combine(row, piv, c)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True when it raised the rank."""
        row = self.reduce(_to_gauss_int_row(row))
        if not row:
            return False
        self.pivots[min(row)] = _primitive(row)
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rref(self) -> dict:
        """Reduced form as ``{pivot_col: {col: (re, im) mpq}}`` with unit pivots."""
        rows = {}
        for c in sorted(self.pivots, reverse=True):
            row = {k: (mpq(a), mpq(b)) for k, (a, b) in self.pivots[c].items()}
            for c2, r2 in rows.items():
                if c2 in row:
                    fr, fi = row[c2]
                    for k, (a, b) in r2.items():
                        x, y = fr * a - fi * b, fr * b + fi * a
                        u, v = row.get(k, (mpq(0), mpq(0)))
                        row[k] = (u - x, v - y)
                    row = {k: v for k, v in row.items() if v[0] or v[1]}
            pr, pi = row[c]
            nrm = pr * pr + pi * pi
            inv = (pr / nrm, -pi / nrm)
            rows[c] = {k: (a * inv[0] - b * inv[1], a * inv[1] + b * inv[0]) for k, (a, b) in row.items()}
        return dict(sorted(rows.items()))


def _is_int_row(row: dict) -> bool:
    v = next(iter(row.values()))
    return isinstance(v, tuple) and isinstance(v[0], int)


def _build(rows) -> Echelon:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{v : M v = 0}`` as dense lists of :class:`Scalar`.

    The basis is the canonical one: each vector has a 1 at its own free column
    and 0 at every other free column.
    """
    red = _build(rows).rref()
    free = [c for c in range(ncols) if c not in red]
    basis = []
    for f in free:
        vec = [Scalar()] * ncols
        vec[f] = Scalar.gauss(1)
        for c, row in red.items():
            if f in row:
                re, im = row[f]
                vec[c] = Scalar.gauss(-re, -im)
        basis.append(vec)
    return basis


def rank(rows) -> int:
    return _build(rows).rank


def solve(rows, rhs) -> list | None:
    """One solution of ``M v = rhs`` (free variables zero), or None."""
    ncols = 1 + max((c for r in rows for c in r), default=-1)
    aug = []
    for r, b in zip(rows, rhs):
        r = dict(r)
        b = as_scalar(b)
        if b:
            r[ncols] = b
        aug.append(r)
    red = _build(aug).rref()
    if ncols in red:
        return None
    sol = [Scalar()] * ncols
    for c, row in red.items():
        if ncols in row:
            re, im = row[ncols]
            sol[c] = Scalar.gauss(re, im)
    return sol


def vectorize(elements) -> tuple:
    """Coordinates of Weyl elements / spinors over their joint monomial support.

    Returns ``(rows, keys)`` where ``rows`` are per-element ``{col: Scalar}``.
    """
    keys = sorted({k for e in elements for k in e.terms})
    index = {k: i for i, k in enumerate(keys)}
    return [{index[k]: c for k, c in e.terms.items()} for e in elements], keys


def in_span(target, basis) -> list | None:
    """Coefficients expressing ``target`` in terms of ``basis`` (or None)."""
    vecs, keys = vectorize(list(basis) + [target])
    *cols, tvec = vecs
    # transpose: one equation per monomial
    eqs = [dict() for _ in keys]
    for j, col in enumerate(cols):
        for i, v in col.items():
            eqs[i][j] = v
    rhs = [tvec.get(i, Scalar()) for i in range(len(keys))]
    if not basis:
        return [] if not target.terms else None
    sol = solve(eqs, rhs)
    if sol is None:
        return None
    sol = list(sol) + [Scalar()] * (len(cols) - len(sol))
    return sol[: len(cols)]
