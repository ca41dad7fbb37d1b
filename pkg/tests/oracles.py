"""Independent reference computations, sharing no code with the package.

sympy does the symbolic work; the sphere relation is applied as a
remainder in x, and Bezout pairs come from a plain linear solve.
"""

from fractions import Fraction

import sympy as sp

X, Y, Z = sp.symbols("x y z")
SPHERE = X**2 + Y**2 + Z**2 - 1


def sym_reduce(expr):
    """Normal form modulo the sphere relation (remainder of division in x)."""
    return sp.expand(sp.rem(sp.expand(expr), SPHERE, X))


def sym_terms(expr) -> dict:
    """``{(ex, ey, ez): (Fraction re, Fraction im)}`` of the normal form."""
    red = sym_reduce(expr)
    if red == 0:
        return {}
    out = {}
    for mono, c in sp.Poly(red, X, Y, Z).terms():
        c = sp.expand(c)
        out[tuple(mono)] = (Fraction(str(sp.re(c))), Fraction(str(sp.im(c))))
    return {m: c for m, c in out.items() if c != (0, 0)}


def element_terms(p) -> dict:
    """Package element -> the same shape as ``sym_terms``."""
    return {m: (c.re, c.im) for m, c in p.terms.items()}


def to_sympy(p):
    """Package SphereElement -> sympy expression, via its public term map."""
    expr = 0
    for (ex, ey, ez), c in p.terms.items():
        expr += (sp.Rational(c.re.numerator, c.re.denominator)
                 + sp.I * sp.Rational(c.im.numerator, c.im.denominator)) * X**ex * Y**ey * Z**ez
    return expr


def bezout_linear_solve(n: int):
    """Unique (P, Q) with deg < n, from the 2n x 2n coefficient system."""
    p = sp.symbols(f"p0:{n}")
    q = sp.symbols(f"q0:{n}")
    P = sum(c * Z**k for k, c in enumerate(p))
    Q = sum(c * Z**k for k, c in enumerate(q))
    expr = sp.expand((1 + Z) ** n * P + (1 - Z) ** n * Q - 1)
    eqs = [expr.coeff(Z, k) for k in range(2 * n)]
    sol = sp.solve(eqs, list(p) + list(q), dict=True)
    assert len(sol) == 1
    s = sol[0]
    P_coeffs = [Fraction(str(s[c])) for c in p]
    Q_coeffs = [Fraction(str(s[c])) for c in q]
    return P_coeffs, Q_coeffs


def bezout_series_oracle(n: int):
    """P as the truncated power-series inverse of (2 - u)^n in u = 1 - z,
    returned as coefficients in z."""
    u = sp.symbols("u")
    series = sp.series(1 / (2 - u) ** n, u, 0, n).removeO()
    P = sp.expand(series.subs(u, 1 - Z))
    return [Fraction(str(P.coeff(Z, k))) for k in range(n)]
