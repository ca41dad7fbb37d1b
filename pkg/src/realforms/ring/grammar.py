"""Canonical text form of ring elements, and a parser for it.

Output grammar (golden-file format)::

    element   := "0" | term (joiner term)*
    joiner    := " + " | " - "
    term      := coeff | monomial | coeff "*" monomial
    monomial  := var ("^" exp)? ("*" var ("^" exp)?)*      exponent 1 elided
    coeff     := "a" | "a/b" | "i" | "a*i" | "a/b*i" | "(a/b + c/d*i)"

Terms are ordered graded-lexicographically, highest degree first. A
fractional coefficient in front of a monomial is parenthesized, e.g.
``(-1/4)*z + 1/2``. A term after the first whose coefficient is negative
(real part < 0, or purely imaginary with negative imaginary part) is
written with the `` - `` joiner and its coefficient negated.

The parser accepts a superset: any expression built from integers,
``i``, the ring variables, ``+ - * / ^`` and parentheses. The Unicode
minus sign is accepted as ``-``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import NotAUnit, ParseError
from .gaussian import GaussianRational

# ---------------------------------------------------------------- formatting


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(c: GaussianRational, *, bare_composite: bool = True) -> str:
    re_, im = c.re, c.im
    if not im:
        return _rat(re_)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{_rat(im)}*i"
    if not re_:
        return imag
    sep = " - " if im < 0 else " + "
    body = f"{_rat(re_)}{sep}{imag.lstrip('-')}"
    return body if bare_composite else f"({body})"


def _format_monomial(mono, variables) -> str:
    parts = []
    for v, e in zip(variables, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _format_term(c: GaussianRational, mono, variables) -> str:
    m = _format_monomial(mono, variables)
    if not m:
        return format_scalar(c, bare_composite=False)
    if c.re and c.im:
        return f"{format_scalar(c, bare_composite=False)}*{m}"
    if c == 1:
        return m
    if c == -1:
        return f"-{m}"
    part = c.re if c.re else c.im
    s = format_scalar(c)
    if part.denominator != 1:
        return f"({s})*{m}"
    return f"{s}*{m}"


def format_terms(sorted_terms, variables) -> str:
    """Render ``[(monomial, coeff), ...]`` already in output order."""
    if not sorted_terms:
        return "0"
    out = []
    for idx, (mono, c) in enumerate(sorted_terms):
        if idx == 0:
            out.append(_format_term(c, mono, variables))
        elif c.is_negative():
            out.append(" - " + _format_term(-c, mono, variables))
        else:
            out.append(" + " + _format_term(c, mono, variables))
    return "".join(out)


def _format_denominator(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("(1 + z)" + (f"^{a}" if a > 1 else ""))
    if b:
        parts.append("(1 - z)" + (f"^{b}" if b > 1 else ""))
    return "*".join(parts)


def format_localized(p) -> str:
    num = p.num.serialize()
    if p.is_polynomial():
        return num
    den = _format_denominator(p.a, p.b)
    if p.a and p.b:
        den = f"({den})"
    if len(p.num.terms) > 1:
        num = f"({num})"
    return f"{num}/{den}"


# ---------------------------------------------------------------- LaTeX


def _latex_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_monomial(mono, variables) -> str:
    parts = []
    for v, e in zip(variables, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{{{e}}}")
    return " ".join(parts)


def _latex_coeff(c: GaussianRational, has_mono: bool) -> str:
    if c.re and c.im:
        im = _latex_rat(abs(c.im))
        im = "i" if abs(c.im) == 1 else f"{im} i"
        return f"\\left({_latex_rat(c.re)} {'-' if c.im < 0 else '+'} {im}\\right)"
    if c.im:
        if abs(c.im) == 1:
            return "-i" if c.im < 0 else "i"
        return f"{_latex_rat(c.im)} i"
    if has_mono and abs(c.re) == 1:
        return "-" if c.re < 0 else ""
    return _latex_rat(c.re)


def latex_terms(sorted_terms, variables) -> str:
    if not sorted_terms:
        return "0"
    out = []
    for idx, (mono, c) in enumerate(sorted_terms):
        neg = idx > 0 and c.is_negative()
        if neg:
            c = -c
        m = _latex_monomial(mono, variables)
        coeff = _latex_coeff(c, bool(m))
        body = f"{coeff} {m}".strip() if coeff not in ("", "-") else f"{coeff}{m}"
        if idx == 0:
            out.append(body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()−]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            if op == "−":
                op = "-"
            elif op == "**":
                op = "^"
            toks.append(("op", op, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class _Parser:
    """Recursive-descent evaluator; ``ring`` supplies constants, variables and division."""

    def __init__(self, text: str, ring):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return val

    def expr(self):
        tok = self.peek()
        neg = False
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            neg = tok[1] == "-"
        val = self.term()
        if neg:
            val = -val
        while (tok := self.peek())[0] == "op" and tok[1] in "+-":
            self.take()
            rhs = self.term()
            val = val + rhs if tok[1] == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while (tok := self.peek())[0] == "op" and tok[1] in "*/":
            self.take()
            rhs_tok = self.peek()
            rhs = self.factor()
            if tok[1] == "*":
                val = val * rhs
            else:
                val = self.ring.divide(val, rhs, self, rhs_tok)
        return val

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            # "-x^2" inside a product, e.g. "2*-x"
            self.take()
            return -self.factor()
        base = self.atom()
        if (t := self.peek())[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            if (t2 := self.peek())[0] == "op" and t2[1] in "+-":
                self.take()
                sign = -1 if t2[1] == "-" else 1
            e = self.take()
            if e[0] != "num":
                self.error("expected integer exponent", e)
            k = sign * e[1]
            if k < 0:
                return self.ring.power_negative(base, -k, self, e)
            return base**k
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ring.const(val)
        if kind == "name":
            if val == "i":
                return self.ring.const(GaussianRational(0, 1))
            return self.ring.var(val, self, tok)
        if kind == "op" and val == "(":
            inner = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return inner
        self.error(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


class _FreeRing:
    def __init__(self, variables):
        from .freepoly import FreePolynomial

        self.variables = tuple(variables)
        self.cls = FreePolynomial

    def const(self, c):
        return self.cls.constant(self.variables, c)

    def var(self, name, parser, tok):
        if name not in self.variables:
            parser.error(f"unknown variable {name!r}", tok)
        return self.cls.variable(self.variables, name)

    def _scalar(self, p):
        t = p.terms
        if not t:
            return GaussianRational(0)
        zero = (0,) * len(self.variables)
        if list(t) == [zero]:
            return t[zero]
        return None

    def divide(self, a, b, parser, tok):
        c = self._scalar(b)
        if c is None or c.is_zero():
            parser.error("division only by nonzero constants", tok)
        return a * c.inverse()

    def power_negative(self, base, k, parser, tok):
        c = self._scalar(base)
        if c is None or c.is_zero():
            parser.error("negative exponent on a non-constant", tok)
        return self.const(c.inverse() ** k)


class _LocalizedRing:
    def const(self, c):
        from .localized import LocalizedElement

        return LocalizedElement(c)

    def var(self, name, parser, tok):
        from .localized import LocalizedElement
        from .sphere import SPHERE_VARS, SphereElement

        if name not in SPHERE_VARS:
            parser.error(f"unknown variable {name!r}", tok)
        return LocalizedElement(SphereElement.generators()[SPHERE_VARS.index(name)])

    def divide(self, a, b, parser, tok):
        try:
            return a * b.inverse()
        except NotAUnit:
            parser.error("divisor is not a unit of the localized ring", tok)

    def power_negative(self, base, k, parser, tok):
        try:
            return base.inverse() ** k
        except NotAUnit:
            parser.error("negative power of a non-unit", tok)


def parse_free(text: str, variables):
    return _Parser(text, _FreeRing(variables)).parse()


def parse_localized(text: str):
    return _Parser(text, _LocalizedRing()).parse()


def parse_sphere(text: str):
    val = parse_localized(text)
    if not val.is_polynomial():
        raise ParseError("expression has a nontrivial denominator", 0, text)
    return val.num
