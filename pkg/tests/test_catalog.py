import json
import random

import numpy as np
import pytest

from ellpairs.catalog import CodeCatalog, random_code
from ellpairs.errors import CatalogMiss, FieldMismatch
from ellpairs.gf import GF, field_of_order


def test_builtins():
    F = field_of_order(5)
    cat = CodeCatalog(F)
    assert cat.best(6, 3).min_distance() == 4
    assert cat.best(4, 1).min_distance() == 4
    assert cat.best(4, 0).k == 0
    assert CodeCatalog(GF(2)).best(7, 4).min_distance() == 3


def test_miss_and_search():
    F = GF(2)
    cat = CodeCatalog(F, builtins=False)
    with pytest.raises(CatalogMiss):
        cat.best(8, 4)
    C = cat.best_or_search(8, 4, seed=0, tries=50)
    assert (C.n, C.k) == (8, 4)
    assert C.gen == cat.best_or_search(8, 4, seed=0, tries=50).gen


def test_add_and_round_trip(tmp_path):
    F = field_of_order(3)
    C = random_code(F, 6, 3, np.random.default_rng(0))
    cat = CodeCatalog(F, [C])
    with pytest.raises(FieldMismatch):
        cat.add(random_code(GF(2), 6, 3, random.Random(0)))
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(cat.to_json()))
    back = CodeCatalog.load(path, builtins=False)
    assert len(back) == 1 and back.lookup(6, 3)[0] == C
