import pytest

from ellpairs.errors import BothZero, DegreeZeroInput, DivisionByZeroPoly, NonPositiveDegree, ZeroInput
from ellpairs.gf import GF
from ellpairs.poly import (Poly, count_irreducibles, irreducibles, is_irreducible, poly_divrem, poly_eval,
                           poly_gcd, poly_lcm)

F2, F3, F5 = GF(2), GF(3), GF(5)


def P(F, *c):
    return Poly(F, c)


def test_products_and_division():
    assert P(F2, 1, 1) * P(F2, 1, 1) == P(F2, 1, 0, 1)
    f = P(F5, 2, 0, 0, 1)
    assert f * Poly.one(F5) == f
    q, r = poly_divrem(f, P(F5, 2, 0, 1))
    assert (q, r) == (P(F5, 0, 1), P(F5, 2, 3))
    with pytest.raises(DivisionByZeroPoly):
        poly_divrem(f, Poly.zero(F5))


def test_gcd_lcm():
    a, b, c = P(F5, 2, 0, 1), P(F5, 3, 0, 1), P(F5, 1, 1, 1)
    assert poly_gcd(a * b, a * c) == a
    assert poly_gcd(a, b) == Poly.one(F5)
    assert poly_gcd(a.scale(3), a.scale(3)) == a
    assert poly_lcm(P(F2, 1, 1), P(F2, 1, 1, 1)) == P(F2, 1, 0, 0, 1)
    assert poly_lcm(a, Poly.one(F5)) == a
    with pytest.raises(BothZero):
        poly_gcd(Poly.zero(F5), Poly.zero(F5))
    with pytest.raises(ZeroInput):
        poly_lcm(Poly.zero(F5), a)


def test_eval():
    assert poly_eval(P(F5, 2, 0, 1), 1) == 3
    assert poly_eval(Poly.const(F5, 4), 2) == 4
    f = Poly.from_roots(F5, [1, 3, 4])
    assert all(f(x) == 0 for x in (1, 3, 4))


def test_irreducibility():
    assert is_irreducible(P(F2, 1, 1, 1))
    assert not is_irreducible(P(F2, 1, 0, 1))
    assert is_irreducible(P(F3, 1, 0, 1))
    with pytest.raises(DegreeZeroInput):
        is_irreducible(Poly.one(F3))


def test_irreducible_enumeration_order():
    assert set(irreducibles(F2, 3)) == {P(F2, 1, 1, 0, 1), P(F2, 1, 0, 1, 1)}
    assert irreducibles(F2, 3)[0] == P(F2, 1, 0, 1, 1)
    assert irreducibles(F3, 2)[0] == P(F3, 1, 0, 1)
    assert len(irreducibles(F5, 1, limit=5)) == 5
    # constant term is the most significant key: over GF(5) both constant-1 quadratics come before x^2 + 2
    assert irreducibles(F5, 2, limit=3) == [P(F5, 1, 1, 1), P(F5, 1, 4, 1), P(F5, 2, 0, 1)]


def test_counts():
    assert count_irreducibles(2, 3) == 2
    assert count_irreducibles(7, 1) == 7
    assert count_irreducibles(7, 2) == 21
    with pytest.raises(NonPositiveDegree):
        count_irreducibles(3, 0)
