import numpy as np
import pytest

import oracles
from ellpairs.catalog import random_code
from ellpairs.code import (LinearCode, apply_monomial, code_from_generator, code_sum, dual, galois_dual, hull_dim,
                           hull_dim_by_rank, intersect, macwilliams, min_distance, parity_check,
                           weight_distribution)
from ellpairs.errors import EmptyMatrix, LengthMismatch, NotMonomial, ZeroCode
from ellpairs.example import G1, G2, monomial
from ellpairs.gf import GF, field_of_order
from ellpairs.matrix import Matrix, weighted_permutation

F2 = GF(2)
C1 = LinearCode(Matrix(F2, G1))
C2 = LinearCode(Matrix(F2, G2))


def test_construction():
    assert code_from_generator(F2, Matrix.identity(F2, 5)).k == 5
    dup = Matrix(F2, G2 + G2)
    assert code_from_generator(F2, dup) == C2
    assert (C2.n, C2.k) == (7, 3)
    with pytest.raises(EmptyMatrix):
        LinearCode(Matrix(F2, np.zeros((1, 0), dtype=np.int64)))


def test_parity_and_duals():
    assert parity_check(LinearCode.full(F2, 4)).rows == 0
    H1 = parity_check(C1)
    assert H1.shape == (3, 7) and (Matrix(F2, G1) @ H1.T).is_zero()
    assert dual(dual(C1)) == C1
    assert LinearCode(parity_check(dual(C1))) == C1
    assert dual(C1).min_distance() == 4 == oracles.min_weight(F2, dual(C1).gen.data)
    assert C2 == dual(C1)


def test_galois_dual_over_gf4():
    F4 = field_of_order(4)
    rng = np.random.default_rng(0)
    C = random_code(F4, 5, 2, rng)
    assert galois_dual(C, 0) == dual(C)
    H = galois_dual(C, 1)
    # Hermitian: sum u_i v_i^2 = 0
    for u in C.gen.data:
        for v in H.gen.data:
            assert F4.sum(F4.mul(int(a), F4.pow(int(b), 2)) for a, b in zip(u, v)) == 0


def test_intersection_and_sum():
    assert intersect(C1, C1) == C1
    assert intersect(C1, LinearCode.full(F2, 7)) == C1
    assert intersect(C1, C2).k == 3
    assert code_sum(C1, C2) == C1
    with pytest.raises(LengthMismatch):
        intersect(C1, LinearCode.full(F2, 6))


def test_hull():
    assert hull_dim(C2) == 3  # the simplex code is self-orthogonal
    lcd = LinearCode(Matrix(F2, [[1, 0, 0]]))
    assert hull_dim(lcd) == 0
    rng = np.random.default_rng(3)
    for q in (2, 3):
        F = field_of_order(q)
        for _ in range(15):
            C = random_code(F, int(rng.integers(2, 9)), 2, rng)
            h, h2 = hull_dim_by_rank(C)
            assert h == h2 == hull_dim(C)


def test_min_distance():
    assert min_distance(LinearCode.full(F2, 5)) == 1
    rep = LinearCode(Matrix(GF(3), [[1] * 6]))
    assert min_distance(rep) == 6
    assert min_distance(C1, "direct") == min_distance(C1, "dual") == 3
    assert min_distance(C2) == 4
    with pytest.raises(ZeroCode):
        min_distance(LinearCode.zero(F2, 4))


def test_macwilliams():
    A = weight_distribution(C1)
    assert A == [1, 0, 0, 7, 7, 0, 0, 1]
    assert macwilliams(weight_distribution(C2), 7, 2) == A


def test_monomial_action():
    assert apply_monomial(C1, Matrix.identity(F2, 7)) == C1
    assert intersect(apply_monomial(C1, monomial("A3")), C2).k == 0
    F = field_of_order(5)
    rng = np.random.default_rng(4)
    C = random_code(F, 6, 3, rng)
    A = weighted_permutation(F, 6, list(rng.permutation(6)), [1, 2, 3, 4, 1, 2])
    assert apply_monomial(C, A).min_distance() == C.min_distance()
    with pytest.raises(NotMonomial):
        apply_monomial(C, Matrix(F, np.ones((6, 6), dtype=np.int64)))


def test_json_round_trip():
    assert LinearCode.from_json(C1.to_json()) == C1
