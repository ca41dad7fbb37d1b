from __future__ import annotations

from ..errors import NotAUnit
from .gaussian import GaussianRational
from .sphere import SphereElement

_ONE_PLUS_Z = SphereElement.z_poly([1, 1])
_ONE_MINUS_Z = SphereElement.z_poly([1, -1])


def _z_factor(s: int, k: int) -> SphereElement:
    return (_ONE_PLUS_Z if s > 0 else _ONE_MINUS_Z) ** k


class LocalizedElement:
    """``num / ((1+z)^a (1-z)^b)`` kept in lowest terms.

    Canonical form: ``(1+z)`` does not divide ``num`` when ``a > 0``, and
    likewise ``(1-z)`` when ``b > 0``. Zero is ``(0, 0, 0)``.
    """

    __slots__ = ("_num", "_a", "_b")

    def __init__(self, num, a: int = 0, b: int = 0):
        if a < 0 or b < 0:
            raise ValueError("denominator exponents must be nonnegative")
        num = num if isinstance(num, SphereElement) else SphereElement.const(num)
        if num.is_zero():
            a = b = 0
        while a and (q := num.divide_by_linear(1)) is not None:
            num, a = q, a - 1
        while b and (q := num.divide_by_linear(-1)) is not None:
            num, b = q, b - 1
        self._num, self._a, self._b = num, a, b

    @classmethod
    def coerce(cls, value) -> LocalizedElement:
        if isinstance(value, LocalizedElement):
            return value
        return cls(value)

    @property
    def num(self) -> SphereElement:
        return self._num

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._a == 0 and self._b == 0

    def __add__(self, other):
        try:
            o = LocalizedElement.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = max(self._a, o._a), max(self._b, o._b)
        n1 = self._num * _z_factor(1, a - self._a) * _z_factor(-1, b - self._b)
        n2 = o._num * _z_factor(1, a - o._a) * _z_factor(-1, b - o._b)
        return LocalizedElement(n1 + n2, a, b)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement(-self._num, self._a, self._b)

    def __sub__(self, other):
        try:
            o = LocalizedElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = LocalizedElement.coerce(other)
        except TypeError:
            return NotImplemented
        return LocalizedElement(self._num * o._num, self._a + o._a, self._b + o._b)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return LocalizedElement(self._num**k, self._a * k, self._b * k)

    def conjugate(self) -> LocalizedElement:
        # (1 +- z) are real, so only the numerator changes
        return LocalizedElement(self._num.conjugate(), self._a, self._b)

    def unit_factorization(self):
        """Return ``(gamma, j, k, m, l)`` with
        ``num = gamma (1+z)^j (1-z)^k (x+iy)^m (x-iy)^l``, or raise NotAUnit."""
        p = self._num
        if p.is_zero():
            raise NotAUnit("zero is not a unit")
        j = k = m = l = 0
        changed = True
        while changed:
            changed = False
            while (q := p.divide_by_linear(1)) is not None:
                p, j, changed = q, j + 1, True
            while (q := p.divide_by_linear(-1)) is not None:
                p, k, changed = q, k + 1, True
            while (q := p.divide_by_u(1)) is not None:
                p, m, changed = q, m + 1, True
            while (q := p.divide_by_u(-1)) is not None:
                p, l, changed = q, l + 1, True
        gamma = p.scalar_value()
        if gamma is None:
            raise NotAUnit(f"{self.serialize()} is not a unit of the localized ring")
        return gamma, j, k, m, l

    def inverse(self) -> LocalizedElement:
        gamma, j, k, m, l = self.unit_factorization()
        # (x+iy)^-1 = (x-iy)/((1+z)(1-z)), and symmetrically for x-iy
        num = SphereElement.u_power(l - m) if (l == 0 or m == 0) else (
            SphereElement.u_power(l) * SphereElement.u_power(-m)
        )
        num = num.scale(GaussianRational.coerce(gamma).inverse())
        num = num * _z_factor(1, self._a) * _z_factor(-1, self._b)
        return LocalizedElement(num, j + m + l, k + m + l)

    def __truediv__(self, other):
        return self * LocalizedElement.coerce(other).inverse()

    def __rtruediv__(self, other):
        return LocalizedElement.coerce(other) * self.inverse()

    def cross_equal(self, other) -> bool:
        """Equality by cross-multiplication, independent of canonical form."""
        o = LocalizedElement.coerce(other)
        lhs = self._num * _z_factor(1, o._a) * _z_factor(-1, o._b)
        rhs = o._num * _z_factor(1, self._a) * _z_factor(-1, self._b)
        return lhs == rhs

    def __eq__(self, other):
        if not isinstance(other, LocalizedElement):
            try:
                other = LocalizedElement.coerce(other)
            except TypeError:
                return NotImplemented
        return (self._a, self._b, self._num) == (other._a, other._b, other._num)

    def __hash__(self):
        return hash((self._a, self._b, self._num))

    def __bool__(self):
        return not self.is_zero()

    def serialize(self) -> str:
        from .grammar import format_localized

        return format_localized(self)

    __str__ = serialize

    def __repr__(self):
        return f"LocalizedElement({self.serialize()!r})"

    @classmethod
    def parse(cls, text: str) -> LocalizedElement:
        from .grammar import parse_localized

        return parse_localized(text)


def loc(num, a: int = 0, b: int = 0) -> LocalizedElement:
    return LocalizedElement(num, a, b)


def loc_inv(u: LocalizedElement) -> LocalizedElement:
    return LocalizedElement.coerce(u).inverse()


def loc_eq(p, q) -> bool:
    return LocalizedElement.coerce(p) == LocalizedElement.coerce(q)
