"""Property-based checks on small random instances."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ellpairs.catalog import random_code
from ellpairs.code import code_sum, dual, intersect
from ellpairs.gf import field_of_order
from ellpairs.matrix import Matrix, kernel, rref
from ellpairs.pairs import ell_bounds, ell_routes
from ellpairs.poly import Poly, poly_divrem, poly_gcd, poly_lcm

QS = st.sampled_from([2, 3, 4, 5, 7, 8, 9])


@given(QS, st.data())
def test_field_axioms(q, data):
    F = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1


def polys(q):
    return st.lists(st.integers(0, q - 1), min_size=1, max_size=6)


@given(QS, st.data())
def test_division_and_gcd(q, data):
    F = field_of_order(q)
    f = Poly(F, data.draw(polys(q)))
    g = Poly(F, data.draw(polys(q)))
    if g.is_zero() or f.is_zero():
        return
    qt, r = poly_divrem(f, g)
    assert qt * g + r == f and (r.is_zero() or r.degree < g.degree)
    d, m = poly_gcd(f, g), poly_lcm(f, g)
    assert d.divides(f) and d.divides(g)
    assert d.degree + m.degree == f.degree + g.degree


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 5), st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_rref_and_kernel(q, r, c, seed):
    F = field_of_order(q)
    M = Matrix(F, np.random.default_rng(seed).integers(0, q, size=(r, c)))
    R, rk, piv = rref(M)
    assert rref(R)[0] == R
    K = kernel(M)
    assert K.rows == c - rk and (K.rows == 0 or (M @ K.T).is_zero())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 6), st.data())
def test_pair_identities(q, n, data):
    F = field_of_order(q)
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    k1, k2 = data.draw(st.integers(0, n)), data.draw(st.integers(0, n))
    C1, C2 = random_code(F, n, k1, rng), random_code(F, n, k2, rng)
    routes = ell_routes(C1, C2)
    ell = intersect(C1, C2).k
    assert set(routes.values()) == {ell}
    lo, hi = ell_bounds(n, k1, k2)
    assert lo <= ell <= hi
    assert code_sum(C1, C2).k == k1 + k2 - ell
    assert dual(dual(C1)) == C1
    if k1 and k2 and q ** max(k1, k2) <= 4096:
        assert ell == oracles.intersection_dim(F, C1.gen.data, C2.gen.data)
