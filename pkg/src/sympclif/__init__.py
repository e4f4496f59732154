"""Exact operator calculus for the symplectic Dirac operator on polynomial spinors."""
from .scalars import ALPHA, I, ONE, TAU, ZERO, Scalar
from .weyl import WeylElement, commutator, gen
from .spinor import Spinor, apply
from .oplib import build

__all__ = [
    "ALPHA", "I", "ONE", "TAU", "ZERO", "Scalar", "WeylElement", "commutator", "gen",
    "Spinor", "apply", "build",
]
__version__ = "0.1.0"
