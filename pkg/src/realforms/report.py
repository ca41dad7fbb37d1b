from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bezout import RationalPoly
from .descent import (
    Chart,
    RingMatrix,
    bezout_for,
    build_A,
    build_M,
    verify_gluing,
    verify_involution,
    verify_segre_quadric,
    verify_stable_example,
    verify_transition,
)
from .topology import LoopSample, classify, h1_infinity, rotation, winding_number

CHECK_NAMES = (
    "involution",
    "det_A_is_minus_one",
    "det_M_plus",
    "det_M_minus",
    "transition",
    "gluing_plus",
    "gluing_minus",
)

H1_LEGEND = "h1_infinity_order is the order of Z/nZ; 0 encodes the infinite cyclic group Z"


def corrupted_pair(n: int) -> tuple[RationalPoly, RationalPoly]:
    """Canonical pair with Q shifted by 1, which breaks the Bezout identity."""
    P, Q = bezout_for(n)
    return P, Q + 1


def run_checks(n: int, pair=None) -> dict[str, bool]:
    P, Q = bezout_for(n) if pair is None else pair
    A = build_A(n, P, Q, check=False)
    return {
        "involution": verify_involution(A),
        "det_A_is_minus_one": A.det() == -1,
        "det_M_plus": build_M(n, Chart.UPLUS, (P, Q)).det() == 1,
        "det_M_minus": build_M(n, Chart.UMINUS, (P, Q)).det() == 1,
        "transition": verify_transition(n, (P, Q)),
        "gluing_plus": verify_gluing(n, Chart.UPLUS, pair=(P, Q)),
        "gluing_minus": verify_gluing(n, Chart.UMINUS, pair=(P, Q)),
    }


def global_checks() -> dict[str, bool]:
    return {
        "stable_example": verify_stable_example(),
        "segre_quadric": verify_segre_quadric(),
    }


def clutching_winding(n: int) -> int:
    """Winding of the sampled clutching loop ``t -> R(n t)`` of the model V_n."""
    N = max(1024, 8 * abs(n))
    return winding_number(LoopSample.from_function(lambda t: rotation(n * t), N))


@dataclass
class BundleReport:
    n: int
    bezout: dict[str, str]
    A: list[list[str]]
    checks: dict[str, bool]
    invariants: dict[str, int]
    matrix: RingMatrix | None = field(default=None, repr=False, compare=False)

    @classmethod
    def build(cls, n: int, pair=None) -> BundleReport:
        P, Q = bezout_for(n) if pair is None else pair
        A = build_A(n, P, Q, check=False)
        w = clutching_winding(n)
        return cls(
            n=n,
            bezout={"P": P.serialize(), "Q": Q.serialize()},
            A=A.entry_strings(),
            checks=run_checks(n, (P, Q)),
            invariants={
                "winding": w,
                "stable_class": classify(3, w).class_value,
                "h1_infinity_order": h1_infinity(n),
            },
            matrix=A,
        )

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "bezout": dict(self.bezout),
            "A": [list(r) for r in self.A],
            "checks": dict(self.checks),
            "invariants": dict(self.invariants),
        }

    def to_json(self) -> str:
        return canonical_json(self.as_dict())

    @classmethod
    def from_json(cls, text: str) -> BundleReport:
        obj = json.loads(text)
        return cls(obj["n"], obj["bezout"], obj["A"], obj["checks"], obj["invariants"])

    def to_text(self) -> str:
        lines = [
            f"Sigma_{self.n}: real structure on the trivial rank-2 bundle over the complex sphere",
            f"  P = {self.bezout['P']}",
            f"  Q = {self.bezout['Q']}",
            "  A = [" + "; ".join(", ".join(r) for r in self.A) + "]",
            "checks:",
        ]
        width = max(len(k) for k in self.checks)
        lines += [f"  {k:<{width}}  {'PASS' if v else 'FAIL'}" for k, v in self.checks.items()]
        lines.append("invariants:")
        width = max(len(k) for k in self.invariants)
        lines += [f"  {k:<{width}}  {v}" for k, v in self.invariants.items()]
        lines.append(f"  ({H1_LEGEND})")
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        A = self.matrix if self.matrix is not None else RingMatrix.parse("; ".join(", ".join(r) for r in self.A))
        P = RationalPoly.parse(self.bezout["P"])
        Q = RationalPoly.parse(self.bezout["Q"])
        from .ring.grammar import latex_terms

        def zl(p: RationalPoly) -> str:
            return latex_terms(p.to_sphere().sorted_terms(), ("x", "y", "z"))

        return (
            f"% Sigma_{self.n}\n"
            f"P_{{{self.n}}} = {zl(P)}, \\quad Q_{{{self.n}}} = {zl(Q)}\n"
            f"A_{{{self.n}}} = {A.latex()}\n"
        )


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _row(n: int, inject_bad_bezout: bool = False):
    pair = corrupted_pair(n) if inject_bad_bezout else None
    return n, run_checks(n, pair)


def verify_range(n_min: int, n_max: int, *, parallel: bool = False, inject_bad_bezout: bool = False):
    """Per-n check rows, in order. Work fans out to processes when ``parallel``."""
    ns = list(range(n_min, n_max + 1))
    if parallel and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_row, ns, [inject_bad_bezout] * len(ns)))
    else:
        rows = [_row(n, inject_bad_bezout) for n in ns]
    return rows
