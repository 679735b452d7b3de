import numpy as np
import pytest

import oracles
from ellpairs.catalog import random_code
from ellpairs.code import LinearCode, dual, hull_dim, intersect
from ellpairs.errors import (CertificationError, GammaOutOfRange, IndexOutOfRange, InvalidDims, NotFoundWithinBudget,
                             NotSuperRegular, SearchSpaceTooLarge)
from ellpairs.example import example_pairs, reproduce_example
from ellpairs.gf import GF, field_of_order
from ellpairs.matrix import Matrix, cauchy
from ellpairs.pairs import (IntersectionPair, classify, conjecture_probe, ell_bounds, ell_by_rank, ell_routes,
                            extend_length, pair_from_superregular, reduce_ell, tune_by_monomial)

F2 = GF(2)
BASE = example_pairs()["base"]


def test_invariants():
    with pytest.raises(InvalidDims):
        IntersectionPair(BASE.c1, BASE.c2, 4)
    assert IntersectionPair.from_json(BASE.to_json()).ell == 3
    bad = BASE.to_json()
    bad["ell"] = 2
    with pytest.raises(CertificationError):
        IntersectionPair.from_json(bad)


def test_ell_by_rank():
    assert ell_by_rank(BASE.c1, LinearCode.full(F2, 7)) == 4
    assert ell_by_rank(BASE.c1, BASE.c2) == 3
    routes = ell_routes(BASE.c1, BASE.c2)
    assert set(routes.values()) == {3}
    rng = np.random.default_rng(0)
    F = field_of_order(3)
    for _ in range(10):
        C = random_code(F, 6, 3, rng)
        assert ell_by_rank(C, dual(C)) == hull_dim(C)


def test_bounds():
    assert ell_bounds(7, 4, 3) == (0, 3)
    assert ell_bounds(6, 2, 4) == (0, 2)
    assert ell_bounds(5, 5, 5) == (5, 5)
    with pytest.raises(InvalidDims):
        ell_bounds(4, 5, 1)


def test_classify():
    # G2 spans the dual of G1, so the untwisted pair is a hull configuration
    assert classify(BASE) == "hull-config"
    assert classify(example_pairs()["A1"]) == "generic"
    assert classify(example_pairs()["A3"]) == "LCP"  # k1 + k2 = 7 = n with l = 0
    F = field_of_order(3)
    C = LinearCode(Matrix(F, [[1, 0, 0], [0, 1, 0]]))
    D = LinearCode(Matrix(F, [[0, 0, 1]]))
    assert classify(IntersectionPair.of(C, D)) == "LCD-config"
    E = LinearCode(Matrix(F, [[1, 1, 1]]))
    assert classify(IntersectionPair.of(C, E)) == "LCP"
    S = LinearCode(Matrix(F, [[1, 1, 1]]))
    assert classify(IntersectionPair.of(S, dual(S))) == "hull-config"


def test_example_rows():
    assert all(r.ok for r in reproduce_example())
    assert [r.by_intersection for r in reproduce_example()] == [3, 2, 1, 0]


def test_tune_by_monomial():
    A, pair = tune_by_monomial(BASE.c1, BASE.c2, 3)
    assert A == Matrix.identity(F2, 7) and pair.ell == 3
    for target in range(4):
        A, pair = tune_by_monomial(BASE.c1, BASE.c2, target, seed=1)
        assert pair.ell == target == oracles.intersection_dim(F2, pair.c1.gen.data, BASE.c2.gen.data)
    # binary repetition codes are fixed by every permutation, so l = 0 is unreachable
    rep = LinearCode(Matrix(F2, [[1, 1, 1]]))
    with pytest.raises(NotFoundWithinBudget):
        tune_by_monomial(rep, rep, 0, budget=20)


def test_tune_is_deterministic():
    a = tune_by_monomial(BASE.c1, BASE.c2, 1, seed=7)
    b = tune_by_monomial(BASE.c1, BASE.c2, 1, seed=7)
    assert a[0] == b[0]


def test_reduce_ell():
    assert reduce_ell(BASE, 3) is BASE
    red = reduce_ell(BASE, 0)
    assert red.c2.k == 0 and red.ell == 0
    with pytest.raises(GammaOutOfRange):
        reduce_ell(BASE, 4)
    F = field_of_order(3)
    rng = np.random.default_rng(5)
    while True:
        p = IntersectionPair.of(random_code(F, 6, 4, rng), random_code(F, 6, 4, rng))
        if p.ell == 2:
            break
    r = reduce_ell(p, 1)
    assert r.c2.k == 3 and oracles.intersection_dim(F, r.c1.gen.data, r.c2.gen.data) == 1


def test_extend_length():
    assert extend_length(BASE, 3).n == 7
    e = extend_length(BASE, 2)
    assert (e.n, e.c1.k, e.c2.k, e.ell) == (8, 4, 3, 2)
    assert e.c1.min_distance() == 3 and e.c2.min_distance() >= 4
    z = extend_length(BASE, 0)
    assert z.n == 10 and intersect(z.c1, z.c2).k == 0
    with pytest.raises(GammaOutOfRange):
        extend_length(BASE, -1)


def test_pair_from_superregular():
    F = field_of_order(9)
    xs = [1, 2, 3, 4]
    ys = [y for y in F.elements() if all(F.add(x, y) for x in xs)][:4]
    A = cauchy(F, xs, ys)
    p = pair_from_superregular(A, 2, 1, 1)
    assert (p.c1.k, p.c2.k, p.ell) == (2, 2, 1)
    assert p.c1.min_distance() == 3 and p.c2.min_distance() == 3
    z = pair_from_superregular(A, 0, 2, 0)
    assert z.c1.k == 0 and z.ell == 0
    s = pair_from_superregular(A, 2, 2, 1)
    assert s.c1.k + s.c2.k - s.ell == 4  # C + D is the whole space
    with pytest.raises(IndexOutOfRange):
        pair_from_superregular(A, 2, 3, 0)
    with pytest.raises(NotSuperRegular):
        pair_from_superregular(Matrix(F, [[1, 1], [1, 1]]), 1, 1, 0)


def test_conjecture_probe():
    found = conjecture_probe(2, 7, 4, 3)
    assert sorted(found) == [0, 1, 2, 3] and all(found.values())
    full = conjecture_probe(3, 3, 3, 3)
    assert list(full) == [3] and full[3] is not None
    grs_found = conjecture_probe(3, 4, 2, 2)
    assert all(w is not None and w.pair.ell == l for l, w in grs_found.items())
    assert {w.route for w in grs_found.values()} <= {"grs", "scaled-grs"}
    with pytest.raises(SearchSpaceTooLarge):
        conjecture_probe(5, 6, 3, 3)
