from __future__ import annotations

import json
from enum import Enum
from typing import Sequence

from ..errors import ChartMismatch, NonUnitDeterminant
from ..ring import LocalizedElement, SphereElement
from ..ring.grammar import latex_terms
from ..ring.sphere import SPHERE_VARS


class Chart(str, Enum):
    GLOBAL = "global"
    UPLUS = "uplus"
    UMINUS = "uminus"
    OVERLAP = "overlap"

    def join(self, other: Chart) -> Chart:
        """Smallest chart ring containing both."""
        if self is other or other is Chart.GLOBAL:
            return self
        if self is Chart.GLOBAL:
            return other
        return Chart.OVERLAP


def _check_entry(e, chart: Chart):
    if chart is Chart.GLOBAL:
        if isinstance(e, LocalizedElement):
            if not e.is_polynomial():
                raise ChartMismatch(f"global entry has a denominator: {e}")
            return e.num
        return e if isinstance(e, SphereElement) else SphereElement.const(e)
    e = LocalizedElement.coerce(e)
    if chart is Chart.UPLUS and e.b:
        raise ChartMismatch(f"U+ entry inverts 1 - z: {e}")
    if chart is Chart.UMINUS and e.a:
        raise ChartMismatch(f"U- entry inverts 1 + z: {e}")
    return e


class RingMatrix:
    """Small dense matrix over the sphere ring or one of its chart localizations."""

    __slots__ = ("entries", "chart")

    def __init__(self, rows: Sequence[Sequence], chart: Chart | str = Chart.GLOBAL):
        chart = Chart(chart)
        entries = tuple(tuple(_check_entry(e, chart) for e in row) for row in rows)
        if not entries or any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged or empty matrix")
        self.entries = entries
        self.chart = chart

    @classmethod
    def identity(cls, size: int, chart: Chart | str = Chart.GLOBAL) -> RingMatrix:
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], chart)

    @classmethod
    def diag(cls, values, chart: Chart | str = Chart.GLOBAL) -> RingMatrix:
        k = len(values)
        return cls([[values[i] if i == j else 0 for j in range(k)] for i in range(k)], chart)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def in_chart(self, chart: Chart | str) -> RingMatrix:
        return RingMatrix(self.entries, chart)

    def block_diag(self, other: RingMatrix) -> RingMatrix:
        c1, c2 = self.shape[1], other.shape[1]
        rows = [list(row) + [0] * c2 for row in self.entries]
        rows += [[0] * c1 + list(row) for row in other.entries]
        return RingMatrix(rows, self.chart.join(other.chart))

    def with_entry(self, i: int, j: int, value) -> RingMatrix:
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return RingMatrix(rows, self.chart)

    def _lifted(self, chart: Chart):
        if chart is Chart.GLOBAL:
            return self.entries
        return tuple(tuple(LocalizedElement.coerce(e) for e in row) for row in self.entries)

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        chart = self.chart.join(other.chart)
        a, b = self._lifted(chart), other._lifted(chart)
        rows = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = a[i][0] * b[0][j]
                for t in range(1, k):
                    acc = acc + a[i][t] * b[t][j]
                row.append(acc)
            rows.append(row)
        return RingMatrix(rows, chart)

    mul = __matmul__

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        chart = self.chart.join(other.chart)
        a, b = self._lifted(chart), other._lifted(chart)
        return RingMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)], chart)

    def conjugate(self) -> RingMatrix:
        """Entrywise coefficient conjugation (the sigma-twist of the matrix)."""
        return RingMatrix([[e.conjugate() for e in row] for row in self.entries], self.chart)

    def transpose(self) -> RingMatrix:
        return RingMatrix(list(zip(*self.entries)), self.chart)

    def _minor(self, i: int, j: int) -> RingMatrix:
        rows = [r[:j] + r[j + 1:] for t, r in enumerate(self.entries) if t != i]
        return RingMatrix(rows, self.chart)

    def det(self):
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        e = self.entries
        if n == 1:
            return e[0][0]
        if n == 2:
            return e[0][0] * e[1][1] - e[0][1] * e[1][0]
        acc = None
        for j in range(n):
            term = e[0][j] * self._minor(0, j).det()
            if acc is None:
                acc = term
            elif j % 2:
                acc = acc - term
            else:
                acc = acc + term
        return acc

    def adjugate(self) -> RingMatrix:
        n, m = self.shape
        if n != m:
            raise ValueError("adjugate of a non-square matrix")
        if n == 1:
            return RingMatrix([[1]], self.chart)
        cof = []
        for i in range(n):
            row = []
            for j in range(n):
                d = self._minor(i, j).det()
                row.append(-d if (i + j) % 2 else d)
            cof.append(row)
        return RingMatrix(cof, self.chart).transpose()

    def inverse(self) -> RingMatrix:
        """Inverse of a determinant-one matrix (its adjugate)."""
        d = self.det()
        if d != 1:
            raise NonUnitDeterminant(f"determinant is {d}, expected 1")
        return self.adjugate()

    def is_identity(self) -> bool:
        n, m = self.shape
        return n == m and all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(n) for j in range(m)
        )

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        chart = self.chart.join(other.chart)
        return self._lifted(chart) == other._lifted(chart)

    def __hash__(self):
        return hash(self.entries)

    # ------------------------------------------------------------ text forms
    def entry_strings(self) -> list[list[str]]:
        return [[e.serialize() for e in row] for row in self.entries]

    def serialize(self) -> str:
        return "; ".join(", ".join(row) for row in self.entry_strings())

    __str__ = serialize

    def __repr__(self):
        return f"RingMatrix({self.serialize()!r}, chart={self.chart.value!r})"

    @classmethod
    def parse(cls, text: str, chart: Chart | str = Chart.GLOBAL) -> RingMatrix:
        rows = [[LocalizedElement.parse(cell) for cell in _split_top(row, ",")] for row in _split_top(text, ";")]
        return cls(rows, chart)

    def to_json(self) -> str:
        return json.dumps({"chart": self.chart.value, "entries": self.entry_strings()}, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> RingMatrix:
        obj = json.loads(text)
        rows = [[LocalizedElement.parse(cell) for cell in row] for row in obj["entries"]]
        return cls(rows, obj.get("chart", Chart.GLOBAL))

    def latex(self) -> str:
        rows = []
        for row in self.entries:
            cells = []
            for e in row:
                if isinstance(e, LocalizedElement) and not e.is_polynomial():
                    num = latex_terms(e.num.sorted_terms(), SPHERE_VARS)
                    den = []
                    if e.a:
                        den.append("(1+z)" + (f"^{{{e.a}}}" if e.a > 1 else ""))
                    if e.b:
                        den.append("(1-z)" + (f"^{{{e.b}}}" if e.b > 1 else ""))
                    cells.append(f"\\frac{{{num}}}{{{''.join(den)}}}")
                else:
                    p = e.num if isinstance(e, LocalizedElement) else e
                    cells.append(latex_terms(p.sorted_terms(), SPHERE_VARS))
            rows.append(" & ".join(cells))
        body = " \\\\\n".join(rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def _split_top(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out
