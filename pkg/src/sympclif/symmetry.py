"""First-order symmetries of D_s for n = 1, found by exact linear algebra.

Unknowns are the coefficients of

    A = F0 dx + F1 dy + F2 dq + F3,   B = G0 dx + G1 dy + G2 dq + G3

with F in Pol_{<= d}(x, y, q) and G in Pol_{<= d+2}(x, y, q).  The equation
D_s A = B D_s is linear in them, so its solutions are a nullspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import Echelon, in_span, nullspace, rank, vectorize
from .scalars import ONE, Scalar
from .weyl import WeylElement, commutator
from . import oplib as O

__all__ = [
    "SymmetryBasis", "solve_symmetries", "reference_symmetries", "structural_constraints_check",
    "split_first_order", "nonclosure_witness", "nonclosure_check", "same_span",
]

# derivative slot for F0..F3 (None is the zeroth-order part)
_SLOTS = (3, 4, 5, None)


def _monomials(d: int) -> list:
    return [e for e in product(range(d + 1), repeat=3) if sum(e) <= d]


def _element(mono: tuple, slot) -> WeylElement:
    key = list(mono) + [0, 0, 0]
    if slot is not None:
        key[slot] = 1
    return WeylElement._raw(1, {tuple(key): ONE})


@dataclass
class SymmetryBasis:
    degree: int
    A: list
    B: list

    @property
    def dimension(self) -> int:
        return len(self.A)

    def to_json(self) -> dict:
        return {"degree": self.degree, "dimension": self.dimension,
                "A": [a.to_json() for a in self.A], "B": [b.to_json() for b in self.B]}


def _unknowns(d: int):
    a_cols = [(m, s) for s in _SLOTS for m in _monomials(d)]
    b_cols = [(m, s) for s in _SLOTS for m in _monomials(d + 2)]
    return a_cols, b_cols


def solve_symmetries(d: int) -> SymmetryBasis:
    """Basis of the A-space in reduced echelon form, each with its certified B."""
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    D = O.Ds(1)
    a_cols, b_cols = _unknowns(d)
    images = [D * _element(m, s) for m, s in a_cols]
    images += [-(_element(m, s) * D) for m, s in b_cols]
    rows_index: dict = {}
    eqs: dict = {}
    for col, img in enumerate(images):
        for key, c in img.terms.items():
            r = rows_index.setdefault(key, len(rows_index))
            eqs.setdefault(r, {})[col] = c
    ncols = len(images)
    sols = nullspace([eqs[r] for r in sorted(eqs)], ncols)
    na = len(a_cols)
    # canonical basis: RREF of the full solution vectors, ordered A-unknowns first
    ech = Echelon()
    for v in sols:
        ech.add({i: c for i, c in enumerate(v) if c})
    A_list, B_list = [], []
    for _, row in ech.rref().items():
        vec = {i: Scalar.gauss(re, im) for i, (re, im) in row.items()}
        A = _assemble({i: c for i, c in vec.items() if i < na}, a_cols, 0)
        B = _assemble({i: c for i, c in vec.items() if i >= na}, b_cols, na)
        if D * A != B * D:
            raise ArithmeticError("symmetry certificate failed")
        A_list.append(A)
        B_list.append(B)
    return SymmetryBasis(d, A_list, B_list)


def _assemble(vec: dict, cols: list, offset: int) -> WeylElement:
    out = WeylElement.zero(1)
    for i, c in vec.items():
        m, s = cols[i - offset]
        out = out + _element(m, s) * c
    return out


def reference_symmetries() -> dict:
    """The known first-order symmetries together with the identity."""
    H, X, E = O.Htilde(), O.Xtilde(), O.E(1)
    y, x = O.y(), O.x()
    return {
        "dx": O.dx(), "dy": O.dy(), "Htilde": H, "Xtilde": X, "E": E,
        "mixed": y * H - x * X * 2 + y * E + y * Scalar.gauss(Fraction(3, 2)),
        "Id": O.one(1),
    }


def same_span(first: list, second: list) -> bool:
    r1, r2 = rank(vectorize(first)[0]), rank(vectorize(second)[0])
    return r1 == r2 == rank(vectorize(list(first) + list(second))[0])


def split_first_order(A: WeylElement) -> tuple:
    """(F0, F1, F2, F3) as ``{(x, y, q) exponents: Scalar}`` dicts."""
    parts = ({}, {}, {}, {})
    for key, c in A.terms.items():
        mono, der = key[:3], key[3:]
        if sum(der) > 1:
            raise ValueError("operator is not first order")
        idx = 3 if not any(der) else der.index(1)
        parts[idx][mono] = c
    return parts


def _shape_report(A: WeylElement) -> dict:
    F0, F1, F2, F3 = split_first_order(A)
    q2 = {m: c for m, c in F3.items() if m[2] == 2}
    rest = {m: c for m, c in F3.items() if m[2] != 2}
    return {
        "F0_no_q": all(m[2] == 0 for m in F0),
        "F1_only_y": all(m[0] == 0 and m[2] == 0 for m in F1),
        "F2_linear_in_q": all(m[2] == 1 for m in F2),
        "F3_q2_part_affine_in_x": all(m[1] == 0 and m[0] <= 1 for m in q2),
        "F3_rest_only_y": all(m[0] == 0 and m[2] == 0 for m in rest),
    }


def structural_constraints_check(d: int = 3) -> dict:
    """Shape facts of every solution vector, keyed by its basis index."""
    basis = solve_symmetries(d)
    return {i: _shape_report(A) for i, A in enumerate(basis.A)}


def nonclosure_witness() -> WeylElement:
    """[[dx, Z1], [dy, Z2]] for the real-coordinate pair."""
    Z1, Z2 = O.Z_real(1), O.Z_real(2)
    return commutator(commutator(O.dx(), Z1), commutator(O.dy(), Z2))


def nonclosure_check() -> dict:
    H, E = O.Htilde(), O.E(1)
    E21 = E * 2 + O.one(1)
    W = nonclosure_witness()
    span = [H, O.Xtilde(), O.Ytilde(), O.dx(), O.dy(), O.Z_real(1), O.Z_real(2), E, O.one(1)]
    return {
        "witness_formula": W == H * E21 * E21 * 4,
        "outside_span": in_span(W, span) is None,
        "span_rank": rank(vectorize(span)[0]),
    }
