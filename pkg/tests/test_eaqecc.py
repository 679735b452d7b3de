import csv
import io
from fractions import Fraction

import numpy as np
import pytest

import oracles
from ellpairs.catalog import HAMMING_7_4, SIMPLEX_7_3, CodeCatalog
from ellpairs.code import LinearCode
from ellpairs.eaqecc import (CATALOG_COLUMNS, MDS_GRID_COLUMNS, EaqeccParams, catalog_search, eaqecc_from_pair,
                             eaqecc_from_parity, mds_eaqecc, mds_grid, params_from_row)
from ellpairs.errors import CatalogMiss, CertificationError, DimensionMismatch, DistanceTooExpensive, ParameterOutOfRange
from ellpairs.example import example_pairs
from ellpairs.gf import GF, field_of_order
from ellpairs.matrix import Matrix
from ellpairs.pairs import IntersectionPair

F2 = GF(2)
HAM = LinearCode(Matrix(F2, HAMMING_7_4), name="hamming")


def test_params_properties():
    p = EaqeccParams(6, 4, 3, 2, 5)
    assert p.singleton_slack == 0 and p.mds and p.valid
    assert p.net_rate == Fraction(2, 6) and str(p) == "[[6,4,3;2]]_5"
    with pytest.raises(CertificationError):
        EaqeccParams(6, 4, 4, 2, 5).certify()
    assert not EaqeccParams(4, 1, 1, 4, 2).valid  # c > n - 1


def test_from_parity():
    H = HAM.parity
    # the Hamming parity check spans the self-orthogonal simplex code, so c = 0
    p = eaqecc_from_parity(H, H, 3, 3)
    assert (p.n, p.k, p.d, p.c) == (7, 1, 3, 0)
    I = Matrix(F2, np.hstack([np.eye(3, dtype=np.int64), np.zeros((3, 4), dtype=np.int64)]))
    p = eaqecc_from_parity(I, I, 1, 1)
    assert p.c == 3
    with pytest.raises(DimensionMismatch):
        eaqecc_from_parity(I, Matrix(F2, [[1, 0]]), 1, 1)


def test_from_pair():
    base = example_pairs()["base"]
    p = eaqecc_from_pair(base)
    assert (p.n, p.k, p.c) == (7, 0, 1) and p.degenerate
    same = eaqecc_from_pair(IntersectionPair.of(HAM, HAM))
    assert (same.k, same.c) == (0, 0) and same.degenerate
    a3 = example_pairs()["A3"]
    d1 = oracles.min_weight(F2, a3.c1.dual().gen.data)
    p = eaqecc_from_pair(a3)
    assert (p.n, p.k, p.d, p.c) == (7, 3, min(d1, 4), 4) and p.valid
    with pytest.raises(DistanceTooExpensive):
        eaqecc_from_pair(a3, limit=4)


def test_mds_eaqecc_points():
    F5 = field_of_order(5)
    p, pair = mds_eaqecc(F5, 6, 2, 0)
    assert str(p) == "[[6,4,3;2]]_5" and p.singleton_slack == 0
    p, _ = mds_eaqecc(F5, 6, 2, 1)
    assert str(p) == "[[6,3,3;1]]_5"
    p, _ = mds_eaqecc(F5, 6, 3, 3)
    assert p.c == 0 and str(p) == "[[6,0,4;0]]_5"
    with pytest.raises(ParameterOutOfRange):
        mds_eaqecc(F5, 7, 2, 0)


def test_mds_grid_rows_read_back():
    rows = mds_grid(field_of_order(4), nmax=5)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=MDS_GRID_COLUMNS)
    w.writeheader()
    w.writerows(rows)
    back = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert len(back) == len(rows)
    for r in back:
        params_from_row(r)
    r = dict(back[5])
    r["d"] = str(int(r["d"]) + 1)
    with pytest.raises(CertificationError):
        params_from_row(r)


def test_catalog_search_binary_length_7():
    cat = CodeCatalog(F2, [HAM, HAM.dual()])
    entries = catalog_search(F2, [7], r=1, codes=cat)
    assert entries
    for e in entries:
        p = e.params
        assert p.net_rate > 0 and p.net_rate == Fraction(e.k2 - e.k1, 7)
        if e.rate_at_least_half:
            assert Fraction(e.k2 - e.ell, 7) >= Fraction(1, 2)
        # recompute l and the parameters from the catalog codes themselves
        C2, D = cat.best(7, e.k2), cat.best(7, 7 - e.k1)
        C1 = D.dual()
        z = np.zeros((1, 7), dtype=np.int64)
        ell = oracles.intersection_dim(F2, C1.gen.data if C1.k else z, C2.gen.data)
        assert ell == e.ell
        assert (p.k, p.c) == (e.k2 - ell, e.k1 - ell)
        assert p.d == min(oracles.min_weight(F2, D.gen.data), oracles.min_weight(F2, C2.gen.data))
        params_from_row(e.to_row())
    assert set(entries[0].to_row()) == set(CATALOG_COLUMNS)


def test_catalog_miss():
    cat = CodeCatalog(F2, builtins=False)
    assert catalog_search(F2, [5], r=1, codes=cat) == []
    with pytest.raises(CatalogMiss):
        catalog_search(F2, [5], r=1, codes=cat, on_miss="raise")
    with pytest.raises(ParameterOutOfRange):
        catalog_search(F2, [4], r=2)
