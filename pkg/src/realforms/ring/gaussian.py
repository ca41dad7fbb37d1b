from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """Exact element ``re + im*i`` of Q[i]."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def conj(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm2(self) -> Fraction:
        """Squared modulus."""
        return self._re * self._re + self._im * self._im

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def is_negative(self) -> bool:
        """Sign convention used when printing: leading nonzero part is negative."""
        return self._re < 0 or (self._re == 0 and self._im < 0)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("zero Gaussian rational has no inverse")
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self):
        from .grammar import format_scalar

        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
