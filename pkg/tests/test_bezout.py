from fractions import Fraction

import pytest

from oracles import bezout_linear_solve, bezout_series_oracle
from realforms.bezout import RationalPoly, bezout_pair, verify_bezout
from realforms.errors import DomainError

F = Fraction

# frozen from bezout_linear_solve(3) and bezout_series_oracle(3)
P3 = RationalPoly([F(1, 2), F(-9, 16), F(3, 16)])
Q3 = RationalPoly([F(1, 2), F(9, 16), F(3, 16)])


def test_n1():
    assert bezout_pair(1) == (RationalPoly([F(1, 2)]), RationalPoly([F(1, 2)]))


def test_n2():
    P, Q = bezout_pair(2)
    assert P == RationalPoly([F(1, 2), F(-1, 4)])
    assert Q == RationalPoly([F(1, 2), F(1, 4)])
    assert P.serialize() == "(-1/4)*z + 1/2"


def test_n3_frozen_oracle():
    # (3z^2 - 9z + 8)/16 and its mirror
    assert P3 == RationalPoly([8, -9, 3]) * F(1, 16)
    assert bezout_pair(3) == (P3, Q3)


def test_n3_oracles_agree_with_frozen_values():
    P, Q = bezout_linear_solve(3)
    assert RationalPoly(P) == P3 and RationalPoly(Q) == Q3
    assert RationalPoly(bezout_series_oracle(3)) == P3


@pytest.mark.parametrize("n", [0, -1])
def test_domain(n):
    with pytest.raises(DomainError):
        bezout_pair(n)


@pytest.mark.parametrize(
    "n, P, Q, expected",
    [
        (1, RationalPoly([F(1, 2)]), RationalPoly([F(1, 2)]), True),
        (1, RationalPoly([1]), RationalPoly([]), False),
        (2, RationalPoly([F(1, 2), F(-1, 4)]), RationalPoly([F(1, 2), F(1, 4)]), True),
        (2, RationalPoly([F(1, 2), F(1, 4)]), RationalPoly([F(1, 2), F(-1, 4)]), False),
    ],
)
def test_verify_bezout(n, P, Q, expected):
    assert verify_bezout(n, P, Q) is expected


@pytest.mark.parametrize("n", range(1, 65))
def test_identity_degree_and_mirror(n):
    P, Q = bezout_pair(n)
    assert verify_bezout(n, P, Q)
    assert P.degree == Q.degree == n - 1
    assert Q == P.mirror()


@pytest.mark.parametrize("n", range(1, 17))
def test_linear_solve_oracle(n):
    P, Q = bezout_linear_solve(n)
    assert bezout_pair(n) == (RationalPoly(P), RationalPoly(Q))


def test_rational_poly_arithmetic():
    z = RationalPoly.z()
    p = (1 + z) ** 3
    q, r = divmod(p, 1 - z)
    assert q * (1 - z) + r == p
    assert r == 8
    assert p(1) == 8
    assert RationalPoly.parse("(3/16)*z^2 - (9/16)*z + 1/2") == P3


def test_parse_rejects_complex():
    with pytest.raises(ValueError):
        RationalPoly.parse("i*z")
