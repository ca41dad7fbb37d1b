from __future__ import annotations

from typing import Iterable, Mapping

from ..errors import VariableMismatch
from .gaussian import GaussianRational

Monomial = tuple  # tuple[int, ...], one exponent per declared variable


def grlex_key(mono: Monomial):
    """Sort key: ``sorted(..., key=grlex_key, reverse=True)`` puts the highest
    total degree first, ties broken lexicographically in declared order."""
    return (sum(mono), mono)


class FreePolynomial:
    """Sparse polynomial over Q[i] in an explicitly declared variable list.

    No quotient relation is applied. Elements from different variable
    contexts never mix.
    """

    __slots__ = ("_vars", "_terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Monomial, object] = ()):
        self._vars = tuple(variables)
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(self._vars) or min(mono, default=0) < 0:
                raise ValueError(f"bad monomial {mono} for variables {self._vars}")
            c = GaussianRational.coerce(c)
            if c:
                clean[mono] = clean.get(mono, GaussianRational(0)) + c
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def variable(cls, variables: Iterable[str], name: str) -> FreePolynomial:
        variables = tuple(variables)
        mono = tuple(int(v == name) for v in variables)
        if sum(mono) != 1:
            raise VariableMismatch(f"{name!r} is not one of {variables}")
        return cls(variables, {mono: 1})

    @classmethod
    def constant(cls, variables: Iterable[str], c) -> FreePolynomial:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def generators(cls, variables: Iterable[str]) -> tuple[FreePolynomial, ...]:
        variables = tuple(variables)
        return tuple(cls.variable(variables, v) for v in variables)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def _lift(self, other) -> FreePolynomial:
        if isinstance(other, FreePolynomial):
            if other._vars != self._vars:
                raise VariableMismatch(f"variable contexts differ: {self._vars} vs {other._vars}")
            return other
        return FreePolynomial.constant(self._vars, GaussianRational.coerce(other))

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out.get(m, 0) + c
        return FreePolynomial(self._vars, out)

    __radd__ = __add__

    def __neg__(self):
        return FreePolynomial(self._vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return FreePolynomial(self._vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = FreePolynomial.constant(self._vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> FreePolynomial:
        return FreePolynomial(self._vars, {m: c.conj() for m, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, FreePolynomial):
            return self._vars == other._vars and self._terms == other._terms
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self._vars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"FreePolynomial({self._vars}, {self.serialize()!r})"

    def serialize(self) -> str:
        from .grammar import format_terms

        return format_terms(self.sorted_terms(), self._vars)

    __str__ = serialize

    @classmethod
    def parse(cls, text: str, variables: Iterable[str]) -> FreePolynomial:
        from .grammar import parse_free

        return parse_free(text, tuple(variables))
