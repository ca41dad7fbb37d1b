"""The coordinate ring of the complex 2-sphere, ``Q[i][x, y, z]/(x^2 + y^2 + z^2 - 1)``.

Public normal form: every monomial has x-degree at most one, obtained by
rewriting ``x^2 -> 1 - y^2 - z^2`` to fixpoint. This is what ``terms``,
``serialize`` and equality expose.

Internally an element is kept in light-cone coordinates ``u = x + iy``,
``v = x - iy`` where the relation reads ``u*v = (1 - z)(1 + z)``. As a
``Q[i][z]``-module the ring is free on ``1, u^k, v^k`` (k >= 1), so an
element is a handful of univariate blocks in z indexed by a signed
integer (k > 0 for ``u^k``, k < 0 for ``v^|k|``). Products of the
descent matrices stay sparse in this basis, while in the x, y, z
basis a power like ``(x - iy)^32`` carries hundreds of terms.

Block coefficients are Gaussian integers over one shared denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Mapping

from .freepoly import FreePolynomial, grlex_key
from .gaussian import GaussianRational

SPHERE_VARS = ("x", "y", "z")

# A z-block is a pair (re, im) of equal-length int tuples, constant term first.
_EMPTY = ((), ())


def _strip(re: list, im: list):
    n = len(re)
    while n and not re[n - 1] and not im[n - 1]:
        n -= 1
    return tuple(re[:n]), tuple(im[:n])


def _block_add(f, g, sf: int = 1, sg: int = 1):
    n = max(len(f[0]), len(g[0]))
    re = [0] * n
    im = [0] * n
    for i, (a, b) in enumerate(zip(*f)):
        re[i] += sf * a
        im[i] += sf * b
    for i, (a, b) in enumerate(zip(*g)):
        re[i] += sg * a
        im[i] += sg * b
    return _strip(re, im)


def _block_mul(f, g):
    fr, fi = f
    gr, gi = g
    if not fr or not gr:
        return _EMPTY
    n = len(fr) + len(gr) - 1
    re = [0] * n
    im = [0] * n
    greal = not any(gi)
    for i, (a, b) in enumerate(zip(fr, fi)):
        if not a and not b:
            continue
        if greal:
            for j, c in enumerate(gr):
                if c:
                    re[i + j] += a * c
                    im[i + j] += b * c
        else:
            for j, (c, d) in enumerate(zip(gr, gi)):
                re[i + j] += a * c - b * d
                im[i + j] += a * d + b * c
    return _strip(re, im)


@lru_cache(maxsize=None)
def _one_minus_z2_pow(m: int):
    """(1 - z^2)^m as an integer block."""
    re = [0] * (2 * m + 1)
    for k in range(m + 1):
        re[2 * k] = (-1) ** k * comb(m, k)
    return tuple(re), (0,) * (2 * m + 1)


def _block_div_linear(f, s: int):
    """Exact quotient of ``f`` by ``1 + s*z`` (s = +-1), or None."""
    fr, fi = f
    d = len(fr) - 1
    if d < 1:
        return None
    qr = [0] * d
    qi = [0] * d
    qr[d - 1] = s * fr[d]
    qi[d - 1] = s * fi[d]
    for j in range(d - 1, 0, -1):
        qr[j - 1] = s * (fr[j] - qr[j])
        qi[j - 1] = s * (fi[j] - qi[j])
    if qr[0] != fr[0] or qi[0] != fi[0]:
        return None
    return tuple(qr), tuple(qi)


def _block_div_1mz2(f):
    q = _block_div_linear(f, 1)
    return None if q is None else _block_div_linear(q, -1)


def _split_scalar(c: GaussianRational):
    """Return ``(p, q, d)`` with ``c = (p + q*i)/d`` and d > 0 integer."""
    d = c.re.denominator * c.im.denominator // gcd(c.re.denominator, c.im.denominator)
    return c.re.numerator * (d // c.re.denominator), c.im.numerator * (d // c.im.denominator), d


class SphereElement:
    __slots__ = ("_den", "_blocks", "_terms_cache", "_hash")

    def __init__(self, blocks: Mapping[int, tuple] | None = None, den: int = 1, *, _normalized=False):
        # Low-level constructor; callers outside this module use the factories.
        if _normalized:
            self._den = den
            self._blocks = blocks
        else:
            self._den, self._blocks = _normalize(dict(blocks or {}), den)
        self._terms_cache = None
        self._hash = None

    # ------------------------------------------------------------ factories
    @classmethod
    def zero(cls) -> SphereElement:
        return cls({}, 1, _normalized=True)

    @classmethod
    def one(cls) -> SphereElement:
        return cls.const(1)

    @classmethod
    def const(cls, c) -> SphereElement:
        c = GaussianRational.coerce(c)
        p, q, d = _split_scalar(c)
        return cls({0: ((p,), (q,))}, d)

    @classmethod
    def z_poly(cls, coeffs) -> SphereElement:
        """Element of Q[i][z] from coefficients, constant term first."""
        cs = [GaussianRational.coerce(c) for c in coeffs]
        den = 1
        for c in cs:
            for part in (c.re, c.im):
                den = den * part.denominator // gcd(den, part.denominator)
        re = [int(c.re * den) for c in cs]
        im = [int(c.im * den) for c in cs]
        return cls({0: (tuple(re), tuple(im))}, den)

    @classmethod
    def u_power(cls, k: int) -> SphereElement:
        """``(x + iy)^k`` for k >= 0, ``(x - iy)^|k|`` for k < 0."""
        return cls({k: ((1,), (0,))}, 1)

    @classmethod
    def x(cls) -> SphereElement:
        return _X

    @classmethod
    def y(cls) -> SphereElement:
        return _Y

    @classmethod
    def z(cls) -> SphereElement:
        return _Z

    @classmethod
    def generators(cls):
        return _X, _Y, _Z

    @classmethod
    def from_terms(cls, terms: Mapping[tuple, object]) -> SphereElement:
        """Build from an x, y, z exponent map (any x-degree allowed)."""
        groups: dict[tuple[int, int], dict[int, GaussianRational]] = {}
        for (ex, ey, ez), c in terms.items():
            c = GaussianRational.coerce(c)
            if c:
                g = groups.setdefault((ex, ey), {})
                g[ez] = g.get(ez, 0) + c
        out = cls.zero()
        for (ex, ey), zcoef in groups.items():
            deg = max(zcoef)
            zp = cls.z_poly([zcoef.get(j, 0) for j in range(deg + 1)])
            out = out + _xy_image(ex, ey) * zp
        return out

    # ------------------------------------------------------------ accessors
    @property
    def terms(self) -> dict:
        """Normal-form monomial map ``{(e_x, e_y, e_z): GaussianRational}``, e_x <= 1."""
        if self._terms_cache is None:
            self._terms_cache = self._compute_terms()
        return dict(self._terms_cache)

    def _compute_terms(self):
        acc_re: dict = {}
        acc_im: dict = {}
        for k, (fr, fi) in self._blocks.items():
            base = _uv_power_xyz(k)
            for j, (a, b) in enumerate(zip(fr, fi)):
                if not a and not b:
                    continue
                for (ex, ey, ez), (c, d) in base.items():
                    m = (ex, ey, ez + j)
                    acc_re[m] = acc_re.get(m, 0) + a * c - b * d
                    acc_im[m] = acc_im.get(m, 0) + a * d + b * c
        den = self._den
        out = {}
        for m in acc_re:
            r, i = acc_re[m], acc_im[m]
            if r or i:
                out[m] = GaussianRational(Fraction(r, den), Fraction(i, den))
        return out

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def to_free(self) -> FreePolynomial:
        return FreePolynomial(SPHERE_VARS, self.terms)

    def is_zero(self) -> bool:
        return not self._blocks

    def scalar_value(self) -> GaussianRational | None:
        """The constant if this element is a scalar, else None."""
        if not self._blocks:
            return GaussianRational(0)
        if list(self._blocks) != [0] or len(self._blocks[0][0]) != 1:
            return None
        (p,), (q,) = self._blocks[0]
        return GaussianRational(Fraction(p, self._den), Fraction(q, self._den))

    def z_coefficients(self) -> list[GaussianRational] | None:
        """Coefficients (constant first) if the element lies in Q[i][z], else None."""
        if not self._blocks:
            return []
        if list(self._blocks) != [0]:
            return None
        fr, fi = self._blocks[0]
        return [GaussianRational(Fraction(a, self._den), Fraction(b, self._den)) for a, b in zip(fr, fi)]

    def lightcone_blocks(self) -> dict[int, list[GaussianRational]]:
        """Coefficients of ``u^k z^j`` grouped by k (negative k for powers of v)."""
        return {
            k: [GaussianRational(Fraction(a, self._den), Fraction(b, self._den)) for a, b in zip(fr, fi)]
            for k, (fr, fi) in self._blocks.items()
        }

    # ------------------------------------------------------------ arithmetic
    @staticmethod
    def _lift(other) -> SphereElement:
        if isinstance(other, SphereElement):
            return other
        return SphereElement.const(other)

    def __add__(self, other):
        if not isinstance(other, SphereElement):
            try:
                other = SphereElement.const(other)
            except TypeError:
                return NotImplemented
        return _combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SphereElement):
            try:
                other = SphereElement.const(other)
            except TypeError:
                return NotImplemented
        return _combine(self, other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        blocks = {k: (tuple(-a for a in fr), tuple(-b for b in fi)) for k, (fr, fi) in self._blocks.items()}
        return SphereElement(blocks, self._den, _normalized=True)

    def __mul__(self, other):
        if not isinstance(other, SphereElement):
            try:
                return self.scale(GaussianRational.coerce(other))
            except TypeError:
                return NotImplemented
        out: dict[int, tuple] = {}
        for k1, f1 in self._blocks.items():
            for k2, f2 in other._blocks.items():
                g = _block_mul(f1, f2)
                if k1 * k2 < 0:
                    g = _block_mul(g, _one_minus_z2_pow(min(abs(k1), abs(k2))))
                k = k1 + k2
                out[k] = _block_add(out[k], g) if k in out else g
        return SphereElement(out, self._den * other._den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> SphereElement:
        c = GaussianRational.coerce(c)
        p, q, d = _split_scalar(c)
        blocks = {}
        for k, (fr, fi) in self._blocks.items():
            blocks[k] = (tuple(p * a - q * b for a, b in zip(fr, fi)), tuple(p * b + q * a for a, b in zip(fr, fi)))
        return SphereElement(blocks, self._den * d)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative exponent in the polynomial ring; use LocalizedElement")
        result = SphereElement.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> SphereElement:
        """Conjugate coefficients, fixing x, y, z (swaps u and v)."""
        blocks = {-k: (fr, tuple(-b for b in fi)) for k, (fr, fi) in self._blocks.items()}
        return SphereElement(blocks, self._den, _normalized=True)

    # ------------------------------------------------------------ exact division helpers
    def divide_by_linear(self, s: int) -> SphereElement | None:
        """Exact quotient by ``1 + s*z`` (s = +1 or -1), or None if not divisible."""
        if not self._blocks:
            return self
        out = {}
        for k, f in self._blocks.items():
            q = _block_div_linear(f, s)
            if q is None:
                return None
            out[k] = q
        return SphereElement(out, self._den)

    def divide_by_u(self, sign: int = 1) -> SphereElement | None:
        """Exact quotient by ``x + iy`` (sign=+1) or ``x - iy`` (sign=-1), or None."""
        if not self._blocks:
            return self
        out = {}
        for j, f in self._blocks.items():
            if (sign > 0 and j >= 1) or (sign < 0 and j <= -1):
                out[j - sign] = f
            else:
                q = _block_div_1mz2(f)
                if q is None:
                    return None
                out[j - sign] = q
        return SphereElement(out, self._den)

    # ------------------------------------------------------------ comparison / text
    def __eq__(self, other):
        if not isinstance(other, SphereElement):
            try:
                other = SphereElement.const(other)
            except TypeError:
                return NotImplemented
        return self._den == other._den and self._blocks == other._blocks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._den, tuple(sorted(self._blocks.items()))))
        return self._hash

    def __bool__(self):
        return bool(self._blocks)

    def serialize(self) -> str:
        from .grammar import format_terms

        return format_terms(self.sorted_terms(), SPHERE_VARS)

    __str__ = serialize

    def __repr__(self):
        return f"SphereElement({self.serialize()!r})"

    @classmethod
    def parse(cls, text: str) -> SphereElement:
        from .grammar import parse_sphere

        return parse_sphere(text)


def _normalize(blocks: dict, den: int):
    if den <= 0:
        raise ValueError("denominator must be positive")
    clean = {}
    g = den
    for k, (fr, fi) in blocks.items():
        fr, fi = _strip(list(fr), list(fi))
        if fr:
            clean[k] = (fr, fi)
            if g != 1:
                for a in fr:
                    g = gcd(g, a)
                for b in fi:
                    g = gcd(g, b)
    if not clean:
        return 1, {}
    if g > 1:
        clean = {k: (tuple(a // g for a in fr), tuple(b // g for b in fi)) for k, (fr, fi) in clean.items()}
        den //= g
    return den, clean


def _combine(p: SphereElement, q: SphereElement, sign: int) -> SphereElement:
    d1, d2 = p._den, q._den
    g = gcd(d1, d2)
    m1, m2 = d2 // g, d1 // g
    out = {}
    for k in set(p._blocks) | set(q._blocks):
        f = p._blocks.get(k, _EMPTY)
        h = q._blocks.get(k, _EMPTY)
        out[k] = _block_add(f, h, m1, sign * m2)
    return SphereElement(out, d1 * m1)


@lru_cache(maxsize=None)
def _uv_power_xyz(k: int) -> dict:
    """x, y, z normal form of ``(x + s*iy)^|k|`` (s = sign k) as Gaussian-integer pairs."""
    if k == 0:
        return {(0, 0, 0): (1, 0)}
    s = 1 if k > 0 else -1
    prev = _uv_power_xyz(k - s)
    out: dict = {}

    def add(m, r, i):
        a, b = out.get(m, (0, 0))
        out[m] = (a + r, b + i)

    for (ex, ey, ez), (r, i) in prev.items():
        # times x
        if ex == 0:
            add((1, ey, ez), r, i)
        else:
            add((0, ey, ez), r, i)
            add((0, ey + 2, ez), -r, -i)
            add((0, ey, ez + 2), -r, -i)
        # times s*i*y:  (r + i*I) * (s*I) = -s*i + s*r*I
        add((ex, ey + 1, ez), -s * i, s * r)
    return {m: c for m, c in out.items() if c != (0, 0)}


_X = SphereElement({1: ((1,), (0,)), -1: ((1,), (0,))}, 2)  # (u + v)/2
_Y = SphereElement({1: ((0,), (-1,)), -1: ((0,), (1,))}, 2)  # -i(u - v)/2
_Z = SphereElement({0: ((0, 1), (0, 0))}, 1)


@lru_cache(maxsize=None)
def _xy_image(ex: int, ey: int) -> SphereElement:
    return (_X**ex) * (_Y**ey)


def reduce_terms(terms: Mapping[tuple, object]) -> dict:
    """Normal form of a raw x, y, z polynomial under ``x^2 -> 1 - y^2 - z^2``.

    Works directly on monomials; ``x^(2q+r)`` becomes ``x^r (1 - y^2 - z^2)^q``,
    which is what exhaustive application of the rule produces.
    """
    out: dict = {}
    for (ex, ey, ez), c in terms.items():
        c = GaussianRational.coerce(c)
        if not c:
            continue
        q, r = divmod(ex, 2)
        for b in range(q + 1):
            for cc in range(q - b + 1):
                mult = comb(q, b) * comb(q - b, cc) * (-1) ** (b + cc)
                m = (r, ey + 2 * b, ez + 2 * cc)
                out[m] = out.get(m, 0) + c * mult
    return {m: c for m, c in out.items() if c}


def reduce(p) -> SphereElement:
    """Reduce a raw polynomial in x, y, z modulo the sphere relation."""
    if isinstance(p, SphereElement):
        return p
    if isinstance(p, FreePolynomial):
        if p.variables != SPHERE_VARS:
            from ..errors import VariableMismatch

            raise VariableMismatch(f"expected variables {SPHERE_VARS}, got {p.variables}")
        p = p.terms
    return SphereElement.from_terms(reduce_terms(p))
