"""Exact scalars: Gaussian rationals extended by two formal commuting symbols.

``t`` stands for the square root of pi (it appears in Gaussian fiber
integrals) and ``a`` for the spectral parameter.  Neither symbol is ever
simplified, so equality is decided by canonical form alone.
"""
from __future__ import annotations

import cmath
import math
import numbers
from fractions import Fraction

from gmpy2 import mpq

__all__ = ["Scalar", "ONE", "ZERO", "I", "TAU", "ALPHA", "as_scalar", "mpq"]

_ZQ = mpq(0)


def _q(value) -> mpq:
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


class Scalar:
    """Element of Q(i)[t, a], stored as ``{(t_pow, a_pow): (re, im)}``.

    Instances are immutable; every operation returns a new canonical value.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, (re, im) in terms.items():
                re, im = _q(re), _q(im)
                if re or im:
                    clean[(int(key[0]), int(key[1]))] = (re, im)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gauss(cls, re=0, im=0) -> "Scalar":
        """The constant ``re + im*i``."""
        re, im = _q(re), _q(im)
        return cls._raw({(0, 0): (re, im)} if (re or im) else {})

    @classmethod
    def monomial(cls, coeff=1, tau=0, alpha=0) -> "Scalar":
        c = as_scalar(coeff)
        return c * cls._raw({(tau, alpha): (mpq(1), _ZQ)})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant(self) -> tuple:
        """(re, im) of the symbol-free part."""
        return self._terms.get((0, 0), (_ZQ, _ZQ))

    def is_real_rational(self) -> bool:
        return self.is_constant() and self.constant()[1] == 0

    def alpha_degree(self) -> int:
        return max((k[1] for k in self._terms), default=-1)

    def tau_degree(self) -> int:
        return max((k[0] for k in self._terms), default=-1)

    def coeff(self, tau=0, alpha=0) -> "Scalar":
        re, im = self._terms.get((tau, alpha), (_ZQ, _ZQ))
        return Scalar.gauss(re, im)

    def truncate_alpha(self, degree: int) -> "Scalar":
        return Scalar._raw({k: v for k, v in self._terms.items() if k[1] <= degree})

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, (re, im) in other._terms.items():
            if k in out:
                r0, i0 = out[k]
                r, i = r0 + re, i0 + im
                if r or i:
                    out[k] = (r, i)
                else:
                    del out[k]
            else:
                out[k] = (re, im)
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: (-r, -i) for k, (r, i) in self._terms.items()})

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Scalar._raw({k: (r * other, i * other) for k, (r, i) in self._terms.items()})
        other = as_scalar(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        out = {}
        for (t1, a1), (r1, i1) in a.items():
            for (t2, a2), (r2, i2) in b.items():
                k = (t1 + t2, a1 + a2)
                r, i = r1 * r2 - i1 * i2, r1 * i2 + i1 * r2
                if k in out:
                    r0, i0 = out[k]
                    r, i = r0 + r, i0 + i
                out[k] = (r, i)
        return Scalar._raw({k: v for k, v in out.items() if v[0] or v[1]})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Scalar":
        """Inverse of a nonzero symbol-free Gaussian rational."""
        if not self.is_constant() or not self._terms:
            raise ZeroDivisionError(f"cannot invert {self}")
        r, i = self.constant()
        n = r * r + i * i
        return Scalar._raw({(0, 0): (r / n, -i / n)})

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar._raw({k: (r, -i) for k, (r, i) in self._terms.items()})

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        try:
            return self._terms == as_scalar(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- numerics and text --------------------------------------------------
    def to_complex(self, alpha_value: complex = 0.0) -> complex:
        """Evaluate with t -> sqrt(pi) and a -> ``alpha_value``."""
        if not cmath.isfinite(complex(alpha_value)):
            raise ValueError("alpha_value must be finite")
        total = 0j
        root_pi = math.sqrt(math.pi)
        for (t, a), (r, i) in self._terms.items():
            total += complex(float(r), float(i)) * root_pi**t * complex(alpha_value) ** a
        return total

    def __complex__(self):
        return self.to_complex()

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (t, a) in sorted(self._terms):
            r, i = self._terms[(t, a)]
            coef = _gauss_str(r, i)
            sym = "".join(f"*{s}^{e}" for s, e in (("t", t), ("a", a)) if e)
            parts.append(f"({coef}){sym}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Scalar({self})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of ``str``."""
        text = text.strip()
        if text == "0":
            return ZERO
        total = ZERO
        for chunk in _split_top(text):
            chunk = chunk.strip()
            close = chunk.index(")")
            coef = _parse_gauss(chunk[1:close])
            t = a = 0
            for factor in chunk[close + 1:].split("*")[1:]:
                sym, exp = factor.split("^")
                if sym == "t":
                    t = int(exp)
                elif sym == "a":
                    a = int(exp)
                else:
                    raise ValueError(f"unknown symbol {sym!r}")
            total = total + coef * cls._raw({(t, a): (mpq(1), _ZQ)})
        return total


def _qstr(x: mpq) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _gauss_str(r: mpq, i: mpq) -> str:
    if not i:
        return _qstr(r)
    if not r:
        return f"{_qstr(i)}*i"
    sign = "-" if i < 0 else "+"
    return f"{_qstr(r)} {sign} {_qstr(abs(i))}*i"


def _parse_gauss(text: str) -> Scalar:
    text = text.replace(" ", "")
    if "*i" not in text:
        return Scalar.gauss(mpq(text))
    body = text[:-2]
    # split on the sign separating real and imaginary parts (not a leading sign)
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "/":
            return Scalar.gauss(mpq(body[:pos]), mpq(body[pos:].lstrip("+")))
    return Scalar.gauss(0, mpq(body))


def _split_top(text: str):
    depth, start = 0, 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", pos):
            yield text[start:pos]
            start = pos + 3
    yield text[start:]


def as_scalar(value) -> Scalar:
    """Coerce ints, rationals and Gaussian-integer complex numbers."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, Fraction)) or type(value).__name__ == "mpq":
        return Scalar.gauss(value)
    if isinstance(value, complex):
        re, im = value.real, value.imag
        if re != int(re) or im != int(im):
            raise TypeError("only Gaussian-integer complex literals convert exactly")
        return Scalar.gauss(int(re), int(im))
    if isinstance(value, numbers.Rational):
        return Scalar.gauss(mpq(value.numerator, value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} to Scalar")


ZERO = Scalar()
ONE = Scalar.gauss(1)
I = Scalar.gauss(0, 1)
TAU = Scalar._raw({(1, 0): (mpq(1), _ZQ)})
ALPHA = Scalar._raw({(0, 1): (mpq(1), _ZQ)})
