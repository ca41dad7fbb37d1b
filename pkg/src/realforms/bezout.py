"""Univariate polynomials over Q and the Bezout pair for ``(1+z)^n, (1-z)^n``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DomainError


class RationalPoly:
    """Dense polynomial in z over Q, constant term first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def z(cls) -> RationalPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> RationalPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def _lift(self, other) -> RationalPoly:
        return other if isinstance(other, RationalPoly) else RationalPoly.const(other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RationalPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return RationalPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = o.lead()
        for k in range(dq, -1, -1):
            c = rem[k + o.degree] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return RationalPoly(quot), RationalPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def mirror(self) -> RationalPoly:
        """``p(-z)``."""
        return RationalPoly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == RationalPoly.const(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def serialize(self) -> str:
        from .ring.gaussian import GaussianRational
        from .ring.grammar import format_terms

        terms = [((k,), GaussianRational(c)) for k, c in enumerate(self.coeffs) if c]
        return format_terms(list(reversed(terms)), ("z",))

    __str__ = serialize

    def __repr__(self):
        return f"RationalPoly({self.serialize()!r})"

    @classmethod
    def parse(cls, text: str) -> RationalPoly:
        from .ring.freepoly import FreePolynomial

        p = FreePolynomial.parse(text, ("z",))
        deg = p.degree()
        coeffs = [Fraction(0)] * (deg + 1)
        for (k,), c in p.terms.items():
            if not c.is_real():
                raise ValueError(f"{text!r} has non-real coefficients")
            coeffs[k] = c.re
        return cls(coeffs)

    def to_sphere(self):
        from .ring.sphere import SphereElement

        return SphereElement.z_poly(self.coeffs)


def _ext_gcd(f: RationalPoly, g: RationalPoly):
    """Return ``(d, s, t)`` with ``s*f + t*g = d`` and d monic."""
    r0, r1 = f, g
    s0, s1 = RationalPoly.const(1), RationalPoly()
    t0, t1 = RationalPoly(), RationalPoly.const(1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead()
    return r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)


@lru_cache(maxsize=None)
def bezout_pair(n: int) -> tuple[RationalPoly, RationalPoly]:
    """The unique ``(P, Q)`` of degree < n with ``(1+z)^n P + (1-z)^n Q = 1``."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"bezout_pair needs n >= 1, got {n!r}")
    plus = RationalPoly((1, 1)) ** n
    minus = RationalPoly((1, -1)) ** n
    d, s, t = _ext_gcd(plus, minus)
    if d != 1:  # pragma: no cover - (1+z), (1-z) are coprime over Q
        raise ArithmeticError("gcd is not 1")
    # degree reduction: P <- P mod (1-z)^n, fold the quotient into Q
    q, p = divmod(s, minus)
    t = t + q * plus
    return p, t


def verify_bezout(n: int, P: RationalPoly, Q: RationalPoly) -> bool:
    """True iff ``(1+z)^n P + (1-z)^n Q == 1`` exactly."""
    if n < 0:
        return False
    lhs = RationalPoly((1, 1)) ** n * P + RationalPoly((1, -1)) ** n * Q
    return lhs == 1
