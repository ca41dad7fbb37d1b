"""The matrices of the real structures Sigma_n on the trivial rank-2 bundle over
the complex sphere, and exact checks of the identities relating them.

Convention: a matrix ``B`` stands for the antiregular map
``(s, v) -> (sigma(s), B(s) * conj(v))``. Composing it with itself gives
``B * B^sigma``, and a frame change ``M`` sends ``B`` to ``M B (M^sigma)^-1``.
Every identity ``X = Y^-1 Z`` is checked in the inversion-free form ``Y X = Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..bezout import RationalPoly, bezout_pair, verify_bezout
from ..errors import BezoutMismatch, DomainError
from ..ring import FreePolynomial, GaussianRational, LocalizedElement, SphereElement
from .constants import printed_C
from .matrix import Chart, RingMatrix

_ONE_PLUS_Z = SphereElement.z_poly([1, 1])
_ONE_MINUS_Z = SphereElement.z_poly([1, -1])


def bezout_for(n: int) -> tuple[RationalPoly, RationalPoly]:
    """Canonical Bezout pair, extended to n = 0 by ``(1/2, 1/2)``."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n == 0:
        half = RationalPoly.const(Fraction(1, 2))
        return half, half
    return bezout_pair(n)


def _pair(n: int, pair):
    if pair is None:
        return bezout_for(n)
    return pair


def _chart(chart) -> Chart:
    chart = Chart(chart)
    if chart not in (Chart.UPLUS, Chart.UMINUS):
        raise ValueError(f"expected the U+ or U- chart, got {chart.value}")
    return chart


def build_A(n: int, P: RationalPoly | None = None, Q: RationalPoly | None = None, *, check: bool = True) -> RingMatrix:
    if P is None or Q is None:
        P, Q = bezout_for(n)
    if check and not verify_bezout(n, P, Q):
        raise BezoutMismatch(f"(1+z)^{n} P + (1-z)^{n} Q != 1 for P={P}, Q={Q}")
    p, q = P.to_sphere(), Q.to_sphere()
    up, um = _ONE_PLUS_Z**n, _ONE_MINUS_Z**n
    u_n, v_n = SphereElement.u_power(n), SphereElement.u_power(-n)
    s = p + q
    return RingMatrix(
        [
            [v_n * s, um - up],
            [q * q * um - p * p * up, -(u_n * s)],
        ]
    )


def build_M(n: int, chart, pair=None) -> RingMatrix:
    """Local frame ``M_{n,+}`` (on 1+z != 0) or ``M_{n,-}`` (on 1-z != 0)."""
    chart = _chart(chart)
    P, Q = _pair(n, pair)
    p, q = LocalizedElement(P.to_sphere()), LocalizedElement(Q.to_sphere())
    u_n = LocalizedElement(SphereElement.u_power(n))
    v_n = SphereElement.u_power(-n)
    if chart is Chart.UPLUS:
        rows = [[LocalizedElement(v_n, n, 0), LocalizedElement(_ONE_PLUS_Z**n)], [-p, u_n * q]]
    else:
        rows = [[LocalizedElement(_ONE_MINUS_Z**n), LocalizedElement(v_n, 0, n)], [-(u_n * p), q]]
    return RingMatrix(rows, chart)


def build_J(n: int, chart) -> RingMatrix:
    """Local real-structure matrix in the chart frame.

    On U- this is ``[[0, (1-z)^-n], [(1-z)^n, 0]]``. On U+ the identity
    ``A M^sigma = M J`` forces ``[[0, (1+z)^n], [(1+z)^-n, 0]]``; the
    printed U+ matrix has the two exponents swapped (see ``printed_J``).
    """
    chart = _chart(chart)
    if chart is Chart.UPLUS:
        rows = [[0, LocalizedElement(_ONE_PLUS_Z**n)], [LocalizedElement(1, n, 0), 0]]
    else:
        rows = [[0, LocalizedElement(1, 0, n)], [LocalizedElement(_ONE_MINUS_Z**n), 0]]
    return RingMatrix(rows, chart)


def printed_J(n: int, chart) -> RingMatrix:
    """``[[0, (1+-z)^-n], [(1+-z)^n, 0]]`` exactly as printed for both charts."""
    chart = _chart(chart)
    s = 1 if chart is Chart.UPLUS else -1
    lin = _ONE_PLUS_Z if s > 0 else _ONE_MINUS_Z
    inv = LocalizedElement(1, n, 0) if s > 0 else LocalizedElement(1, 0, n)
    return RingMatrix([[0, inv], [LocalizedElement(lin**n), 0]], chart)


def build_D(n: int) -> RingMatrix:
    """Transition ``diag((x+iy)^n, (x+iy)^-n)`` on the overlap, with
    ``(x+iy)^-n = (x-iy)^n / ((1+z)(1-z))^n``."""
    return RingMatrix.diag(
        [LocalizedElement(SphereElement.u_power(n)), LocalizedElement(SphereElement.u_power(-n), n, n)],
        Chart.OVERLAP,
    )


def verify_involution(A: RingMatrix) -> bool:
    return (A @ A.conjugate()).is_identity()


def verify_transition(n: int, pair=None) -> bool:
    """``D_n = M_{n,+}^-1 M_{n,-}``.

    Checked as ``det M_{n,+} = 1`` (so the inverse exists in the U+ ring)
    together with ``M_{n,+} D_n = M_{n,-}``. The product identity alone
    holds for any P, Q; the Bezout relation enters only through the
    determinant.
    """
    Mp = build_M(n, Chart.UPLUS, pair)
    Mm = build_M(n, Chart.UMINUS, pair)
    return Mp.det() == 1 and Mp @ build_D(n) == Mm.in_chart(Chart.OVERLAP)


def verify_gluing(n: int, chart, *, pair=None, J: RingMatrix | None = None) -> bool:
    """``A_n = M J (M^sigma)^-1`` on one chart, checked as ``A_n M^sigma = M J``."""
    chart = _chart(chart)
    P, Q = _pair(n, pair)
    A = build_A(n, P, Q, check=False)
    M = build_M(n, chart, (P, Q))
    J = build_J(n, chart) if J is None else J
    return A @ M.conjugate() == M @ J


def glued_structure(n: int, chart, pair=None) -> RingMatrix:
    """``M J adj(M^sigma)`` on one chart; equals A_n when det M = 1."""
    chart = _chart(chart)
    M = build_M(n, chart, pair)
    return M @ build_J(n, chart) @ M.conjugate().adjugate()


def verify_stable_example(C: RingMatrix | None = None, A2: RingMatrix | None = None) -> bool:
    """``C^-1 C_bar = diag(A_2, 1)``, checked as ``C diag(A_2, 1) = C_bar``."""
    C = printed_C() if C is None else C
    A2 = build_A(2) if A2 is None else A2
    A_hat = A2.block_diag(RingMatrix([[1]]))
    return C @ A_hat == C.conjugate()


SEGRE_VARS = ("x0", "x1", "y0", "y1")


def segre_components() -> tuple[FreePolynomial, ...]:
    x0, x1, y0, y1 = FreePolynomial.generators(SEGRE_VARS)
    i = GaussianRational(0, 1)
    return (
        x0 * y1 + x1 * y0,
        i * (x1 * y0 - x0 * y1),
        x0 * y0 - x1 * y1,
        x0 * y0 + x1 * y1,
    )


def verify_segre_quadric(components=None) -> bool:
    """The image of P1 x P1 lies on ``X^2 + Y^2 + Z^2 - T^2 = 0``."""
    X, Y, Z, T = segre_components() if components is None else components
    return (X * X + Y * Y + Z * Z - T * T).is_zero()


def ideal_generators(n: int) -> list[SphereElement]:
    """``(x+iy)^k (1-z)^(n-k)`` for k = n, ..., 0."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return [SphereElement.u_power(k) * _ONE_MINUS_Z ** (n - k) for k in range(n, -1, -1)]


def n0_witness() -> RingMatrix:
    return RingMatrix.diag([1, GaussianRational(0, 1)])


def verify_n0_equivalence() -> bool:
    """``g (g^sigma)^-1 = A_0`` for ``g = diag(1, i)``, as ``g = A_0 g^sigma``."""
    g = n0_witness()
    return g == build_A(0) @ g.conjugate()


@dataclass(frozen=True)
class RealStructureSpec:
    n: int
    P: RationalPoly
    Q: RationalPoly
    A: RingMatrix

    @classmethod
    def build(cls, n: int) -> RealStructureSpec:
        P, Q = bezout_for(n)
        return cls(n, P, Q, build_A(n, P, Q))


@dataclass(frozen=True)
class ChartData:
    n: int
    chart: Chart
    M: RingMatrix
    J: RingMatrix

    @classmethod
    def build(cls, n: int, chart) -> ChartData:
        chart = _chart(chart)
        return cls(n, chart, build_M(n, chart), build_J(n, chart))
