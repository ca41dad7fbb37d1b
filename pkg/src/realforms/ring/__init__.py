"""Exact arithmetic on the complex 2-sphere and its localizations at 1 +- z."""

from .freepoly import FreePolynomial
from .gaussian import GaussianRational
from .grammar import latex_terms
from .localized import LocalizedElement, loc, loc_eq, loc_inv
from .sphere import SPHERE_VARS, SphereElement, reduce, reduce_terms


def conjugate(p):
    return p.conjugate()


def parse(text: str):
    """Parse into a SphereElement when there is no denominator, else a LocalizedElement."""
    val = LocalizedElement.parse(text)
    return val.num if val.is_polynomial() else val


def serialize(p) -> str:
    return p.serialize()


__all__ = [
    "FreePolynomial",
    "GaussianRational",
    "LocalizedElement",
    "SPHERE_VARS",
    "SphereElement",
    "conjugate",
    "latex_terms",
    "loc",
    "loc_eq",
    "loc_inv",
    "parse",
    "reduce",
    "reduce_terms",
    "serialize",
]
