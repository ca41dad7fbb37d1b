"""Exact construction and verification of a countable family of real
structures on the trivial rank-2 bundle over the complex 2-sphere, plus
the clutching invariants that tell the resulting real forms apart."""

from .bezout import RationalPoly, bezout_pair, verify_bezout
from .ring import FreePolynomial, GaussianRational, LocalizedElement, SphereElement, reduce

__version__ = "0.1.0"

__all__ = [
    "FreePolynomial",
    "GaussianRational",
    "LocalizedElement",
    "RationalPoly",
    "SphereElement",
    "bezout_pair",
    "reduce",
    "verify_bezout",
]
