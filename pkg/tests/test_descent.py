import json
import random
from fractions import Fraction

import pytest
import sympy as sp

from oracles import X, Y, Z, element_terms, sym_reduce, sym_terms, to_sympy
from realforms.bezout import RationalPoly, bezout_pair
from realforms.descent import (
    Chart,
    ChartData,
    RealStructureSpec,
    RingMatrix,
    bezout_for,
    build_A,
    build_D,
    build_J,
    build_M,
    glued_structure,
    ideal_generators,
    printed_A1,
    printed_A2,
    printed_C,
    printed_C_bar,
    printed_J,
    segre_components,
    verify_gluing,
    verify_involution,
    verify_n0_equivalence,
    verify_segre_quadric,
    verify_stable_example,
    verify_transition,
)
from realforms.errors import BezoutMismatch, ChartMismatch, NonUnitDeterminant
from realforms.ring import FreePolynomial, GaussianRational, LocalizedElement, SphereElement

I = GaussianRational(0, 1)
x, y, z = SphereElement.generators()
half = Fraction(1, 2)


def sym_matrix(M: RingMatrix):
    return sp.Matrix([[to_sympy(e) for e in row] for row in M.entries])


# ------------------------------------------------------------------ A_n


def test_A1_entries():
    A = build_A(1)
    assert A.entry_strings() == [["x - i*y", "-2*z"], ["(-1/2)*z", "-x - i*y"]]
    assert A == printed_A1()


def test_A2_matches_printed_matrix():
    A = build_A(2)
    assert A[0, 0] == (x - I * y) ** 2
    assert A[0, 1] == -4 * z
    assert A[1, 0] == z * (z * z - 2) * Fraction(1, 4)
    assert A[1, 1] == -((x + I * y) ** 2)
    assert A == printed_A2()


def test_printed_matrices_against_sympy():
    # independent transcription of the printed entries
    printed = {
        "A1": sp.Matrix([[X - sp.I * Y, -2 * Z], [-Z / 2, -X - sp.I * Y]]),
        "A2": sp.Matrix([[(X - sp.I * Y) ** 2, -4 * Z], [Z * (Z**2 - 2) / 4, -((X + sp.I * Y) ** 2)]]),
    }
    for name, M in (("A1", build_A(1)), ("A2", build_A(2))):
        for e, ref in zip([e for row in M.entries for e in row], printed[name]):
            assert element_terms(e) == sym_terms(ref)


def test_A0_convention():
    assert build_A(0) == RingMatrix([[1, 0], [0, -1]])
    assert bezout_for(0) == (RationalPoly([half]), RationalPoly([half]))


def test_build_A_rejects_non_bezout_pair():
    with pytest.raises(BezoutMismatch):
        build_A(2, RationalPoly([half]), RationalPoly([half]))


def test_det_A1_against_symbolic_expansion():
    expected = sym_reduce(sym_matrix(build_A(1)).det())
    assert expected == -1
    assert build_A(1).det() == -1


@pytest.mark.parametrize("n", range(0, 33))
def test_involution_and_det(n):
    A = build_A(n)
    assert verify_involution(A)
    assert A.det() == -1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_involution_against_sympy(n):
    A = sym_matrix(build_A(n))
    prod = A * A.subs(sp.I, -sp.I)
    assert [sym_reduce(e) for e in prod] == [1, 0, 0, 1]


def test_involution_examples():
    assert verify_involution(printed_A1())
    assert verify_involution(RingMatrix.identity(2))
    assert not verify_involution(RingMatrix([[1, 1], [0, 1]]))


def test_opposite_convention_gives_same_verdict():
    # B^sigma B is the conjugate of B B^sigma, so the two conventions agree
    for n in range(6):
        A = build_A(n)
        assert (A.conjugate() @ A).is_identity()


@pytest.mark.parametrize("n", range(1, 9))
def test_perturbed_pairs_break_involution(n):
    rng = random.Random(1000 + n)
    P, Q = bezout_pair(n)
    for _ in range(20):
        k = rng.randrange(n)
        delta = [0] * (k + 1)
        delta[k] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 5))
        dP = RationalPoly(delta)
        pair = (P + dP, Q) if rng.random() < 0.5 else (P, Q + dP)
        assert not verify_involution(build_A(n, *pair, check=False))


# ------------------------------------------------------------------ matrix algebra


def test_adjugate_identity():
    assert RingMatrix.identity(2).adjugate() == RingMatrix.identity(2)
    assert RingMatrix.identity(3).adjugate() == RingMatrix.identity(3)


def test_adjugate_property_3x3():
    C = printed_C()
    d = C.det()
    assert C @ C.adjugate() == RingMatrix.diag([d, d, d])
    # det C = i/2 (computed exactly)
    assert d == I * half


def test_inverse_requires_unit_det():
    with pytest.raises(NonUnitDeterminant):
        build_A(1).inverse()
    M = build_M(2, Chart.UPLUS)
    assert M @ M.inverse() == RingMatrix.identity(2, Chart.UPLUS)


def test_chart_invariants():
    with pytest.raises(ChartMismatch):
        RingMatrix([[LocalizedElement(1, 1, 0)]], Chart.GLOBAL)
    with pytest.raises(ChartMismatch):
        RingMatrix([[LocalizedElement(1, 0, 1)]], Chart.UPLUS)
    with pytest.raises(ChartMismatch):
        RingMatrix([[LocalizedElement(1, 1, 0)]], Chart.UMINUS)
    assert build_M(3, Chart.UPLUS).chart is Chart.UPLUS
    assert build_D(3).chart is Chart.OVERLAP
    assert (build_M(1, "uplus") @ build_M(1, "uminus")).chart is Chart.OVERLAP


def test_matrix_text_and_json_round_trip():
    for M in (build_A(3), build_M(2, Chart.UMINUS), build_D(2), printed_C()):
        assert RingMatrix.parse(M.serialize(), M.chart) == M
        back = RingMatrix.from_json(M.to_json())
        assert back == M and back.chart is M.chart
    assert json.loads(build_D(1).to_json())["chart"] == "overlap"


# ------------------------------------------------------------------ chart frames


def test_build_J_uplus():
    J = build_J(1, Chart.UPLUS)
    assert J == RingMatrix([[0, LocalizedElement(1 + z)], [LocalizedElement(1, 1, 0), 0]], Chart.UPLUS)


def test_printed_J_uplus_form():
    J = printed_J(1, Chart.UPLUS)
    assert J.entry_strings() == [["0", "1/(1 + z)"], ["z + 1", "0"]]


def test_build_J_uminus_matches_printed():
    for n in range(5):
        assert build_J(n, Chart.UMINUS) == printed_J(n, Chart.UMINUS)


def test_build_M_uminus_n1():
    M = build_M(1, Chart.UMINUS)
    expected = RingMatrix(
        [
            [LocalizedElement(1 - z), LocalizedElement(x - I * y, 0, 1)],
            [LocalizedElement(-(x + I * y) * half), LocalizedElement(half)],
        ],
        Chart.UMINUS,
    )
    assert M == expected


def test_build_D_n1():
    D = build_D(1)
    assert D[0, 0] == LocalizedElement(x + I * y)
    assert D[1, 1] == LocalizedElement(x - I * y, 1, 1)
    assert D[1, 1] * D[0, 0] == 1


@pytest.mark.parametrize("n", range(1, 17))
def test_unimodular_frames(n):
    for chart in (Chart.UPLUS, Chart.UMINUS):
        assert build_M(n, chart).det() == 1


def test_det_M_is_bezout_lhs():
    # before using the relation, det M_{n,+} = (1+z)^n P + (1-z)^n Q (as z-polynomials)
    for n in range(1, 6):
        P, Q = bezout_pair(n)
        Pb, Qb = P + RationalPoly([0, 1]), Q
        lhs = (RationalPoly([1, 1]) ** n * Pb + RationalPoly([1, -1]) ** n * Qb).to_sphere()
        d = build_M(n, Chart.UPLUS, (Pb, Qb)).det()
        assert d == LocalizedElement(lhs)


@pytest.mark.parametrize("n", range(1, 13))
def test_transition(n):
    assert verify_transition(n)


def test_transition_detects_corrupted_Q():
    for n in (1, 2, 3):
        P, Q = bezout_pair(n)
        assert not verify_transition(n, (P, Q + 1))


def test_transition_product_alone_ignores_bezout():
    # why verify_transition also checks det M_{n,+}
    P, Q = bezout_pair(2)
    pair = (P, Q + 1)
    Mp, Mm = build_M(2, Chart.UPLUS, pair), build_M(2, Chart.UMINUS, pair)
    assert Mp @ build_D(2) == Mm.in_chart(Chart.OVERLAP)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("chart", [Chart.UPLUS, Chart.UMINUS])
def test_gluing(n, chart):
    assert verify_gluing(n, chart)


def test_gluing_with_identity_J_fails():
    assert not verify_gluing(1, Chart.UPLUS, J=RingMatrix.identity(2, Chart.UPLUS))


@pytest.mark.parametrize("n", range(1, 6))
def test_printed_uplus_J_does_not_glue(n):
    assert not verify_gluing(n, Chart.UPLUS, J=printed_J(n, Chart.UPLUS))


@pytest.mark.parametrize("n", range(1, 6))
def test_uplus_local_structure_is_computed_not_assumed(n):
    # M^-1 A M^sigma, computed directly, is the corrected U+ matrix
    M = build_M(n, Chart.UPLUS)
    local = M.adjugate() @ build_A(n) @ M.conjugate()
    assert local == build_J(n, Chart.UPLUS)


def test_gluing_opposite_convention_fails():
    M = build_M(1, Chart.UMINUS)
    A = build_A(1)
    assert A @ M != M.conjugate() @ build_J(1, Chart.UMINUS)


@pytest.mark.parametrize("n", range(0, 9))
def test_local_structures_agree_on_overlap(n):
    plus = glued_structure(n, Chart.UPLUS).in_chart(Chart.OVERLAP)
    minus = glued_structure(n, Chart.UMINUS).in_chart(Chart.OVERLAP)
    assert plus == minus
    assert plus == build_A(n)


def test_n0_equivalence_witness():
    assert verify_n0_equivalence()


def test_dataclasses():
    spec = RealStructureSpec.build(2)
    assert spec.A == printed_A2()
    cd = ChartData.build(1, "uminus")
    assert cd.M.det() == 1 and cd.J == build_J(1, Chart.UMINUS)


# ------------------------------------------------------------------ stable 3x3 example


def test_C_bar_is_conjugate_of_C():
    assert printed_C().conjugate() == printed_C_bar()


def test_stable_example():
    assert verify_stable_example()


def test_stable_example_against_sympy():
    C = sym_matrix(printed_C())
    A_hat = sp.diag(sym_matrix(printed_A2()), 1)
    diff = C * A_hat - C.subs(sp.I, -sp.I)
    assert all(sym_reduce(e) == 0 for e in diff)


def test_C_goldens_against_sympy(golden):
    # independent transcription of the printed 3x3 matrices
    h, q = sp.Rational(1, 2), sp.Rational(1, 4)
    C = sp.Matrix([
        [h * Y * (X + sp.I * Y) + sp.I * q * Z**2, sp.I * Z, X],
        [-h * X * (X + sp.I * Y) - q * Z**2, Z, Y],
        [q * Z * (Y - sp.I * X), -(Y + sp.I * X), Z],
    ])
    C_bar = sp.Matrix([
        [h * Y * (X - sp.I * Y) - sp.I * q * Z**2, -sp.I * Z, X],
        [-h * X * (X - sp.I * Y) - q * Z**2, Z, Y],
        [q * Z * (Y + sp.I * X), -(Y - sp.I * X), Z],
    ])
    for name, ref in (("C", C), ("C_bar", C_bar)):
        M = RingMatrix.parse((golden / f"{name}.txt").read_text().rstrip("\n"))
        assert [element_terms(e) for row in M.entries for e in row] == [sym_terms(e) for e in ref]


def test_stable_example_with_A0_fails():
    assert not verify_stable_example(A2=build_A(0))


@pytest.mark.parametrize("i, j", [(r, c) for r in range(3) for c in range(2)])
def test_stable_example_perturbed_entry_fails(i, j):
    C = printed_C()
    assert not verify_stable_example(C.with_entry(i, j, C[i, j] + 1))


def test_third_column_real_perturbation_is_invisible():
    # column 3 of C is real and meets the unit corner of diag(A_2, 1), so
    # replacing x by y there keeps C diag(A_2, 1) = C_bar
    C = printed_C()
    assert verify_stable_example(C.with_entry(0, 2, y))
    assert not verify_stable_example(C.with_entry(0, 2, I * y))


# ------------------------------------------------------------------ quadric and ideals


def test_segre_quadric():
    assert verify_segre_quadric()


def test_segre_quadric_sensitivity():
    X_, Y_, Z_, T_ = segre_components()
    x0, x1, y0, y1 = FreePolynomial.generators(("x0", "x1", "y0", "y1"))
    assert not verify_segre_quadric((X_, x1 * y0 - x0 * y1, Z_, T_))
    assert not verify_segre_quadric((X_, Y_, Z_, 0 * T_))


def test_segre_dropped_i_residue():
    # dropping i leaves 2(x0 y1)^2 + 2(x1 y0)^2 - 4 x0 x1 y0 y1
    X_, _, Z_, T_ = segre_components()
    x0, x1, y0, y1 = FreePolynomial.generators(("x0", "x1", "y0", "y1"))
    Yr = x1 * y0 - x0 * y1
    res = X_ * X_ + Yr * Yr + Z_ * Z_ - T_ * T_
    assert res == 2 * (x0 * y1) ** 2 + 2 * (x1 * y0) ** 2 - 4 * x0 * x1 * y0 * y1


def test_ideal_generators():
    assert ideal_generators(0) == [SphereElement.one()]
    assert ideal_generators(1) == [x + I * y, 1 - z]
    assert ideal_generators(2) == [(x + I * y) ** 2, (x + I * y) * (1 - z), (1 - z) ** 2]
    assert [str(g) for g in ideal_generators(1)] == ["x + i*y", "-z + 1"]


def test_ideal_relation():
    assert (1 - z) * (1 + z) == (x + I * y) * (x - I * y)


# ------------------------------------------------------------------ golden files


@pytest.mark.parametrize(
    "name, build",
    [("A1", lambda: build_A(1)), ("A2", lambda: build_A(2)), ("C", printed_C), ("C_bar", printed_C_bar)],
)
def test_golden_matrices(golden, name, build):
    text = (golden / f"{name}.txt").read_text().rstrip("\n")
    assert build().serialize() == text
    assert RingMatrix.parse(text) == build()


def test_latex_layout():
    tex = build_A(1).latex()
    assert "x - i y & -2 z \\\\" in tex
    assert "-\\frac{1}{2} z & -x - i y" in tex
