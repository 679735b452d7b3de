import pytest

import oracles
from ellpairs.code import code_sum, intersect
from ellpairs.errors import (DegreeConditionViolated, DegreeTooLarge, LcmDegreeTooLarge, NoRootFreeFactor,
                             ParameterOutOfRange, RootAtEvaluationPoint, TheoremPreconditionViolated)
from ellpairs.gf import GF, field_of_order
from ellpairs.grs import (GrsSpec, _generator, grs, grs_code, grs_extended_code, grs_intersection_theorem_check,
                          grs_pair, grs_pair_by_scaling, grs_sum_theorem_check, mds_code, superregular_from_mds)
from ellpairs.matrix import is_super_regular
from ellpairs.poly import Poly, irreducibles, is_irreducible

F3, F5 = GF(3), GF(5)


def P(F, *c):
    return Poly(F, c)


def test_constant_denominator_gives_zero_code():
    C = grs_code(GrsSpec.make(F5, Poly.one(F5), [0, 1, 2]))
    assert C.k == 0 and C.n == 3


def test_small_grs_codes():
    C = grs_code(GrsSpec.make(F5, P(F5, 1, 1), [0, 1, 2, 3]))  # x - 4
    assert C.k == 1 and oracles.min_weight(F5, C.gen.data) == 4
    C = grs_code(GrsSpec.make(F5, P(F5, 2, 0, 1), range(5)))
    assert (C.n, C.k) == (5, 2) and oracles.min_weight(F5, C.gen.data) == 4


def test_extended_codes():
    spec = GrsSpec.make(F5, P(F5, 1, 1), [0, 1, 2], v=[1, 2, 3, 4], extended=True)
    G = _generator(spec)
    assert G[0, -1] == 4  # monic P: the extra coordinate is v_n
    C = grs_extended_code(GrsSpec.make(F3, P(F3, 1, 0, 1), [0, 1, 2], extended=True))
    assert (C.n, C.k) == (4, 2) and oracles.min_weight(F3, C.gen.data) == 3
    F7 = GF(7)
    cubic = irreducibles(F7, 3)[0]
    G = _generator(GrsSpec.make(F7, cubic, range(7), extended=True))
    assert G[0, -1] == G[1, -1] == 0 and G[2, -1] != 0


def test_grsspec_validation_errors():
    with pytest.raises(RootAtEvaluationPoint):
        grs_code(GrsSpec.make(F5, P(F5, 4, 1), [0, 1]))  # x + 4 vanishes at 1
    with pytest.raises(DegreeTooLarge):
        grs_code(GrsSpec.make(F5, P(F5, 2, 0, 0, 1), [0, 1]))
    with pytest.raises(ParameterOutOfRange):
        grs_code(GrsSpec.make(F5, P(F5, 2, 0, 1), [0, 1], extended=True))


def test_intersection_theorem():
    a, b, c = P(F5, 2, 0, 1), P(F5, 3, 0, 1), P(F5, 1, 1, 1)
    # with all five points, deg P + deg Q = 8 > 5 + 2; the extended length 6 satisfies condition 3
    sP = GrsSpec.make(F5, a * b, range(5), extended=True)
    sQ = sP.with_poly(a * c)
    res = grs_intersection_theorem_check(sP, sQ)
    assert res.equal and res.rhs.k == 2
    with pytest.raises(TheoremPreconditionViolated) as exc:
        grs_intersection_theorem_check(GrsSpec.make(F5, a * b, range(5)), GrsSpec.make(F5, a * c, range(5)))
    assert exc.value.failed == [3]
    # P | Q: the intersection is GRS(P)
    sP = GrsSpec.make(F5, a, range(5))
    res = grs_intersection_theorem_check(sP, sP.with_poly(a * c))
    assert res.equal and res.lhs == grs(sP)
    with pytest.raises(TheoremPreconditionViolated) as exc:
        grs_intersection_theorem_check(GrsSpec.make(F5, P(F5, 0, 1), [1, 2]), GrsSpec.make(F5, P(F5, 4, 1), [1, 2]))
    assert 2 in exc.value.failed


def test_sum_theorem():
    a, b, c = P(F5, 2, 0, 1), P(F5, 3, 0, 1), P(F5, 1, 1, 1)
    sP = GrsSpec.make(F5, a * b, range(5), extended=True)
    assert grs_sum_theorem_check(sP, sP).equal
    res = grs_sum_theorem_check(GrsSpec.make(F5, a, range(5)), GrsSpec.make(F5, b, range(5)))
    assert res.equal and res.lhs.k == 4
    with pytest.raises(LcmDegreeTooLarge):
        grs_sum_theorem_check(GrsSpec.make(F5, a * b, range(5)), GrsSpec.make(F5, a * c, range(5)))


def test_theorems_against_generic_code_ops():
    F7 = field_of_order(7)
    (f, g), h = irreducibles(F7, 2, limit=2), irreducibles(F7, 3)[0]
    assert all(is_irreducible(x) for x in (f, g, h))
    sP = GrsSpec.make(F7, f * g, range(7))
    sQ = sP.with_poly(f * h)
    assert intersect(grs(sP), grs(sQ)) == grs(sP.with_poly(f))
    assert code_sum(grs(sP), grs(sQ)) == grs(sP.with_poly(f * g * h))


def test_grs_pair_examples():
    p = grs_pair(F5, 5, 3, 3, 3)
    assert p.c1 == p.c2 and p.ell == 3
    p = grs_pair(F5, 5, 2, 2, 0)
    assert p.ell == 0 == oracles.intersection_dim(F5, p.c1.gen.data, p.c2.gen.data)
    assert all(C.min_distance() == 4 for C in (p.c1, p.c2))
    # GF(3), n = 4: every linear factor vanishes somewhere on the points
    with pytest.raises(NoRootFreeFactor):
        grs_pair(F3, 4, 2, 2, 1)
    with pytest.raises(DegreeConditionViolated):
        grs_pair(F5, 5, 4, 3, 1)
    with pytest.raises(ParameterOutOfRange):
        grs_pair(GF(2), 3, 1, 1, 0)


def test_grs_pair_falls_back_to_extended_code():
    p = grs_pair(F5, 5, 3, 3, 1)  # L must be linear: only the extended code leaves a free root
    assert p.ell == 1 and p.provenance["construction"] == "extended-grs"
    with pytest.raises(NoRootFreeFactor):
        grs_pair(F5, 5, 2, 2, 1)  # f, L, h all linear: two distinct free roots needed


def test_scaled_pair_is_mds():
    F4 = field_of_order(4)
    p = grs_pair_by_scaling(F4, 5, 1, 4, 1)
    assert (p.c1.k, p.c2.k, p.ell) == (1, 4, 1)
    assert p.c1.min_distance() == 5 and p.c2.min_distance() == 2


def test_mds_code_and_superregular():
    for q in (4, 5, 7):
        F = field_of_order(q)
        for n in (q, q + 1):
            for k in range(n + 1):
                C = mds_code(F, n, k)
                assert C.k == k and (k == 0 or C.min_distance() == n - k + 1)
    A = superregular_from_mds(field_of_order(9), 4)
    assert is_super_regular(A)
    with pytest.raises(ParameterOutOfRange):
        superregular_from_mds(F5, 4)
