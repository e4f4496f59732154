"""Fischer-type pairings on n = 1 spinors, two-point kernels and float oracles.

Both arguments of a pairing carry the Gaussian weight, so every fiber
integral has weight ``exp(-q^2)`` and reduces to the moments below, which
are exact multiples of ``t`` (standing for sqrt(pi)).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bases import double_factorial
from .scalars import I, ONE, TAU, ZERO, Scalar, as_scalar
from .spinor import Spinor, apply, apply_terms
from .weyl import WeylElement
from . import oplib as O

__all__ = [
    "gaussian_moment", "moment", "printed_moment", "PairingValue", "fischer", "fischer1",
    "to_zzbar", "TwoPointKernel", "kernel_K", "kernel_Z", "kernel_pairing", "adjoint_table_check",
    "fischer1_float", "fischer_float", "moment_quadrature", "odd_gram_exact", "odd_gram_float",
    "odd_gram_printed", "odd_gram_derived", "real_gram_table", "real_gram_printed",
]


def moment(power: int) -> Scalar:
    """Integral of q^power * exp(-q^2) over the line."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    if power % 2:
        return ZERO
    t = power // 2
    return TAU * Scalar.gauss(Fraction(double_factorial(2 * t - 1), 2 ** t))


def gaussian_moment(t: int) -> Scalar:
    """Integral of q^(2t) * exp(-q^2): t * (2t-1)!! / 2^t."""
    return moment(2 * t)


def printed_moment(t: int) -> Scalar:
    """The variant t*(2t+1)/2^t, kept only so the discrepancy can be reported."""
    return TAU * Scalar.gauss(Fraction(2 * t + 1, 2 ** t))


def moment_quadrature(power: int) -> float:
    from scipy.integrate import quad

    val, _ = quad(lambda q: q ** power * math.exp(-q * q), -np.inf, np.inf, epsabs=1e-14, epsrel=1e-13)
    return val


@dataclass(frozen=True)
class PairingValue:
    """A pairing result; ``sqrt2`` marks an extra factor of sqrt(2)."""

    value: Scalar
    sqrt2: bool = False

    def to_complex(self) -> complex:
        v = self.value.to_complex()
        return v * math.sqrt(2) if self.sqrt2 else v

    def __eq__(self, other):
        if isinstance(other, PairingValue):
            return self.value == other.value and (self.sqrt2 == other.sqrt2 or not self.value)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.sqrt2 if self.value else False))

    def __neg__(self):
        return PairingValue(-self.value, self.sqrt2)

    def __str__(self):
        return f"sqrt(2)*({self.value})" if self.sqrt2 and self.value else str(self.value)

    def to_json(self) -> dict:
        return {"value": str(self.value), "sqrt2": self.sqrt2, "float": repr(self.to_complex())}


def _need_n1(*spinors):
    for s in spinors:
        if s.n != 1:
            raise ValueError("pairings are defined for n = 1 only")


# -- the sesquilinear product -----------------------------------------------------

def fischer(a: Spinor, b: Spinor, conjugate: bool = True) -> PairingValue:
    """Base pairing f(dy, -dx) g at the origin, fiber integral of conj(psi) phi.

    The left argument's whole coefficient is conjugated.  With
    ``conjugate=False`` nothing is conjugated and the form is bilinear.
    """
    _need_n1(a, b)
    total = ZERO
    for (ax, ay, aq), ca in a.terms.items():
        cc = ca.conjugate() if conjugate else ca
        for (bx, by, bq), cb in b.terms.items():
            # dy^ax (-dx)^ay x^bx y^by survives only when ax == by and ay == bx
            if ax != by or ay != bx:
                continue
            m = moment(aq + bq)
            if not m:
                continue
            base = (-1) ** ay * math.factorial(ax) * math.factorial(ay)
            total = total + cc * cb * m * base
    return PairingValue(total)


# -- the bilinear form in complex coordinates ------------------------------------------

def to_zzbar(s: Spinor) -> dict:
    """Rewrite the base polynomial in z, zbar: ``{(r, s, e): Scalar}`` for z^r zbar^s q^e."""
    half = Scalar.gauss(Fraction(1, 2))
    # x = (z + zbar)/2, y = -i (z - zbar)/2
    xs = {(1, 0): half, (0, 1): half}
    ys = {(1, 0): -I * half, (0, 1): I * half}

    def power(lin, e):
        out = {(0, 0): ONE}
        for _ in range(e):
            nxt: dict = {}
            for (r1, s1), c1 in out.items():
                for (r2, s2), c2 in lin.items():
                    k = (r1 + r2, s1 + s2)
                    nxt[k] = nxt.get(k, ZERO) + c1 * c2
            out = nxt
        return out

    res: dict = {}
    for (a, b, e), c in s.terms.items():
        px, py = power(xs, a), power(ys, b)
        for (r1, s1), c1 in px.items():
            for (r2, s2), c2 in py.items():
                k = (r1 + r2, s1 + s2, e)
                res[k] = res.get(k, ZERO) + c * c1 * c2
    return {k: v for k, v in res.items() if v}


def _fiber1(e1: int, e2: int) -> Scalar:
    """Integral of d/dq(q^e1 G) * q^e2 G with G = exp(-q^2/2)."""
    out = -moment(e1 + 1 + e2)
    if e1:
        out = out + moment(e1 - 1 + e2) * e1
    return out


def fischer1(a: Spinor, b: Spinor) -> PairingValue:
    """sqrt(2) [f(dz, dzbar) g / h!]_0 times the fiber integral of (dq psi) phi.

    Bilinear (no conjugation); the left argument must be homogeneous.
    """
    _need_n1(a, b)
    if not a.terms:
        return PairingValue(ZERO, True)
    degs = a.base_degrees()
    if len(degs) != 1:
        raise ValueError("left argument of fischer1 must be homogeneous in x, y")
    h = degs.pop()
    za, zb = to_zzbar(a), to_zzbar(b)
    total = ZERO
    for (r, s, e1), c1 in za.items():
        w = Fraction(math.factorial(r) * math.factorial(s), math.factorial(h))
        for (t, u, e2), c2 in zb.items():
            if r != t or s != u:
                continue
            f = _fiber1(e1, e2)
            if f:
                total = total + c1 * c2 * f * Scalar.gauss(w)
    return PairingValue(total, True)


# -- float oracles ---------------------------------------------------------------------

def _gauss_hermite(npts: int = 80):
    return np.polynomial.hermite.hermgauss(npts)


def _poly_q(coeffs: dict, q: np.ndarray) -> np.ndarray:
    return sum(c * q ** e for e, c in coeffs.items())


def fischer1_float(a: dict, b: dict, npts: int = 80) -> complex:
    """Float evaluation on ``{(x, y, q): complex}`` dicts; the fiber integral
    uses Gauss-Hermite quadrature rather than the exact moments."""
    nodes, weights = _gauss_hermite(npts)
    degs = {k[0] + k[1] for k in a}
    if len(degs) > 1:
        raise ValueError("left argument must be homogeneous")
    h = degs.pop() if degs else 0
    za = to_zzbar_float(a)
    zb = to_zzbar_float(b)
    total = 0j
    for (r, s), fa in za.items():
        fb = zb.get((r, s))
        if fb is None:
            continue
        dpsi = {}
        for e, c in fa.items():
            if e:
                dpsi[e - 1] = dpsi.get(e - 1, 0) + e * c
            dpsi[e + 1] = dpsi.get(e + 1, 0) - c
        integral = np.sum(weights * _poly_q(dpsi, nodes) * _poly_q(fb, nodes))
        total += math.factorial(r) * math.factorial(s) / math.factorial(h) * integral
    return math.sqrt(2) * total


def fischer_float(a: dict, b: dict, npts: int = 80, conjugate: bool = True) -> complex:
    nodes, weights = _gauss_hermite(npts)
    ga: dict = {}
    for (x, y, e), c in a.items():
        ga.setdefault((x, y), {})[e] = c
    gb: dict = {}
    for (x, y, e), c in b.items():
        gb.setdefault((x, y), {})[e] = c
    total = 0j
    for (ax, ay), fa in ga.items():
        fb = gb.get((ay, ax))
        if fb is None:
            continue
        conj = {e: complex(c).conjugate() if conjugate else complex(c) for e, c in fa.items()}
        integral = np.sum(weights * _poly_q(conj, nodes) * _poly_q(fb, nodes))
        total += (-1) ** ay * math.factorial(ax) * math.factorial(ay) * integral
    return total


def to_zzbar_float(a: dict) -> dict:
    """``{(r, s): {e: complex}}`` for a float spinor."""
    out: dict = {}
    for (x, y, e), c in a.items():
        for i in range(x + 1):
            cx = math.comb(x, i) / 2 ** x
            for j in range(y + 1):
                cy = math.comb(y, j) * (-1j / 2) ** y * (-1) ** (y - j)
                key = (i + j, x - i + y - j)
                d = out.setdefault(key, {})
                d[e] = d.get(e, 0j) + c * cx * cy
    return out


# -- two-point kernels ------------------------------------------------------------------

class TwoPointKernel:
    """Polynomial in (xi1, xi2) with n = 1 Weyl-element coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def constant(cls, w: WeylElement) -> "TwoPointKernel":
        return cls({(0, 0): w})

    def __add__(self, other: "TwoPointKernel") -> "TwoPointKernel":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TwoPointKernel(out)

    def __mul__(self, other):
        if isinstance(other, TwoPointKernel):
            out: dict = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    k = (k1[0] + k2[0], k1[1] + k2[1])
                    p = v1 * v2
                    out[k] = out[k] + p if k in out else p
            return TwoPointKernel(out)
        if isinstance(other, WeylElement):
            return self * TwoPointKernel.constant(other)
        return TwoPointKernel({k: v.scale(as_scalar(other)) for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, WeylElement):
            return TwoPointKernel.constant(other) * self
        return self * other

    def __pow__(self, k: int):
        out = TwoPointKernel.constant(WeylElement.scalar(1))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, TwoPointKernel) and self.terms == other.terms

    def __repr__(self):
        return f"TwoPointKernel({self.to_json()})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"xi": list(k), "operator": self.terms[k].to_json()} for k in sorted(self.terms)
            ]
        }


def _xi_linear(c1: WeylElement, c2: WeylElement) -> TwoPointKernel:
    return TwoPointKernel({(1, 0): c1, (0, 1): c2})


def kernel_K(k: int) -> TwoPointKernel:
    """(-xi1 y + xi2 x)^k / k!"""
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = _xi_linear(-O.y(), O.x())
    return base ** k * Scalar.gauss(Fraction(1, math.factorial(k)))


def xi_s() -> TwoPointKernel:
    """-q xi1 + i dq xi2"""
    return _xi_linear(-O.q(), O.dq() * I)


def kernel_Z(k: int, n: int = 1) -> TwoPointKernel:
    """sum_j i^j a_j (-xi1 y + xi2 x)^(k-j)/(k-j)! X_s^j xi_s^j."""
    if n != 1:
        raise ValueError("the two-point kernel is built for n = 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = O.proj_sm_coeffs(k, 1)
    X = O.Xs(1)
    out = TwoPointKernel()
    xs = xi_s()
    for j in range(k + 1):
        term = kernel_K(k - j) * (X ** j) * (xs ** j) * (I ** j * a[j])
        out = out + term
    return out


def kernel_pairing(F: TwoPointKernel, g: Spinor, literal: bool = False) -> Spinor:
    """Pair a kernel against a spinor; the result is a spinor whose (x, y)
    slots hold (xi1, xi2).

    By default each coefficient operator acts through the Fischer adjoint:
    x -> dy, y -> -dx, q -> q, dq -> -dq, coefficients conjugated and the
    order of fiber factors reversed.  ``literal=True`` substitutes x -> dy,
    y -> -dx and keeps the fiber operators and coefficients unchanged.
    """
    _need_n1(g)
    out: dict = {}
    for (e1, e2), w in F.terms.items():
        for key, c in w.terms.items():
            ax, ay, aq, adx, ady, adq = key
            if adx or ady:
                raise ValueError("kernel coefficients may not contain dx or dy")
            poly = dict(g.terms)
            if literal:
                fiber = WeylElement(1, {(0, 0, aq, 0, 0, adq): ONE})
                coef = c
            else:
                fiber = WeylElement(1, {(0, 0, 0, 0, 0, adq): Scalar.gauss((-1) ** adq)}) * \
                    WeylElement(1, {(0, 0, aq, 0, 0, 0): ONE})
                coef = c.conjugate()
            base = WeylElement(1, {(0, 0, 0, ay, ax, 0): Scalar.gauss((-1) ** ay)})
            poly = apply_terms(fiber * base, poly)
            for (x, y, e), v in poly.items():
                if x or y:
                    continue
                kk = (e1, e2, e)
                val = coef * v
                out[kk] = out[kk] + val if kk in out else val
    return Spinor(1, out)


# -- adjoint relations --------------------------------------------------------------------

def random_spinor(rng: random.Random, max_deg: int = 3, max_q: int = 3, nterms: int = 4) -> Spinor:
    terms = {}
    for _ in range(nterms):
        key = (rng.randint(0, max_deg), rng.randint(0, max_deg), rng.randint(0, max_q))
        terms[key] = Scalar.gauss(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), rng.randint(-3, 3))
    return Spinor(1, terms)


ADJOINT_RELATIONS = {
    # name: (left operator, right operator, sign) meaning <L a, b> = sign <a, R b>
    "q": (lambda: O.q(), lambda: O.q(), 1),
    "iq": (lambda: O.q() * I, lambda: O.q() * (-I), 1),
    "dq": (lambda: O.dq(), lambda: O.dq(), -1),
    "idq": (lambda: O.dq() * I, lambda: O.dq() * I, 1),
    "dx": (lambda: O.dx(), lambda: O.y(), 1),
    "dy": (lambda: O.dy(), lambda: O.x(), -1),
    "x": (lambda: O.x(), lambda: O.dy(), 1),
    "y": (lambda: O.y(), lambda: O.dx(), -1),
    "Ds": (lambda: O.Ds(), lambda: O.Xs(), 1),
    "Xs": (lambda: O.Xs(), lambda: O.Ds(), -1),
    "Htilde": (lambda: O.Htilde(), lambda: O.Htilde(), -1),
    "Xtilde": (lambda: O.Xtilde(), lambda: O.Xtilde(), -1),
    "Ytilde": (lambda: O.Ytilde(), lambda: O.Ytilde(), -1),
}


def adjoint_table_check(samples: int = 25, seed: int = 7, relations=None) -> dict:
    """``{relation: bool}``: <L a, b> == sign <a, R b> on a seeded random corpus."""
    rng = random.Random(seed)
    pairs = [(random_spinor(rng), random_spinor(rng)) for _ in range(samples)]
    report = {}
    for name, (left, right, sign) in (relations or ADJOINT_RELATIONS).items():
        L, R = left(), right()
        ok = True
        for a, b in pairs:
            lhs = fischer(apply(L, a), b).value
            rhs = fischer(a, apply(R, b)).value * sign
            if lhs != rhs:
                ok = False
                break
        report[name] = ok
    return report


# -- Gram tables on the odd complex family ---------------------------------------------------

def odd_gram_exact(h: int, k: int, l: int, conjugate: bool = False) -> Scalar:
    """<s_{o,k}^h, s_{o,l}^h> for the normalized odd elements, as a Gaussian rational.

    The rescale factors multiply to t * 2^(k+l+1), which cancels the single
    power of t that every fiber moment carries.
    """
    from .bases import basis_complex_rescaled

    a, fa = basis_complex_rescaled("odd", h, k)
    b, fb = basis_complex_rescaled("odd", h, l)
    v = fischer(a, b, conjugate).value
    if v.tau_degree() > 1 or v.coeff(0):
        raise ArithmeticError("unexpected t-dependence in an odd Gram entry")
    return v.coeff(1) * Scalar.gauss(1 / (fa.rational * fb.rational * 2))


def odd_gram_float(h: int, k: int, l: int, conjugate: bool = False) -> complex:
    from .bases import basis_complex_float

    return fischer_float(basis_complex_float("odd", h, k), basis_complex_float("odd", h, l),
                         conjugate=conjugate)


def _dd_ratio(m: int) -> Fraction:
    return Fraction(double_factorial(m), double_factorial(m + 1))


# (h, offset l - k) -> coefficient c with value c * (2k+2j)!!/(2k+2j+1)!!, j chosen per entry
_PRINTED_ODD_GRAM = {
    2: {-2: (-8, 0), 0: (16, 1), 2: (-8, 2)},
    3: {-3: (-48j, 0), -1: (-16j, 1), 1: (16j, 2), 3: (48j, 3)},
}
# the same table with the |l - k| = 1 entries as they come out of the computation
_DERIVED_ODD_GRAM = {
    2: dict(_PRINTED_ODD_GRAM[2]),
    3: {-3: (-48j, 0), -1: (144j, 1), 1: (-144j, 2), 3: (48j, 3)},
}


def _odd_gram_formula(table: dict, h: int, k: int, l: int) -> complex:
    entry = table[h].get(l - k)
    if entry is None:
        return 0j
    c, j = entry
    return complex(c) * float(_dd_ratio(2 * k + 2 * j))


def odd_gram_printed(h: int, k: int, l: int) -> complex:
    """Closed-form Kronecker-delta table for h in {2, 3} as commonly stated."""
    if h not in _PRINTED_ODD_GRAM:
        raise ValueError("closed form known for h = 2 and h = 3 only")
    return _odd_gram_formula(_PRINTED_ODD_GRAM, h, k, l)


def odd_gram_derived(h: int, k: int, l: int) -> complex:
    """The corrected closed form (for h = 3 the |l - k| = 1 coefficients are -9 times
    the stated ones)."""
    if h not in _DERIVED_ODD_GRAM:
        raise ValueError("closed form known for h = 2 and h = 3 only")
    return _odd_gram_formula(_DERIVED_ODD_GRAM, h, k, l)


def real_gram_table(parity_left: str, parity_right: str, h: int, kmax: int, kmin: int = 0) -> dict:
    """``{(k, l): Scalar}`` of the sesquilinear product on the real-coordinate family."""
    from .bases import basis_real

    lo = max(kmin, h) if parity_left == "odd" else kmin
    lo2 = max(kmin, h) if parity_right == "odd" else kmin
    out = {}
    for k in range(lo, kmax + 1):
        a = basis_real(parity_left, h, k)
        for l in range(lo2, kmax + 1):
            out[(k, l)] = fischer(a, basis_real(parity_right, h, l)).value
    return out


def real_gram_printed(parity: str, k: int, l: int) -> float:
    """The stated homogeneity-2 closed form (coefficient of sqrt(pi))."""
    base = -3 * (2 * k + 2 * l - 5)
    return base / 2 ** (k + l - 3) if parity == "odd" else base / 2 ** (k + l - 2)
