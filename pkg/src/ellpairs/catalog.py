"""A small table of named codes with known parameters.

Stands in for a best-known-codes database.  Besides user-supplied codes it
serves a few families on demand: zero, full, repetition, single parity
check, the binary [7,4,3] Hamming code and its [7,3,4] dual, and MDS codes
for ``n <= q + 1``.
"""

from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Iterable

import numpy as np

from .code import LinearCode
from .errors import CatalogMiss, FieldMismatch, ParameterOutOfRange, TooLargeToEnumerate
from .gf import Field, field_from_json
from .matrix import Matrix

HAMMING_7_4 = [
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1],
]
SIMPLEX_7_3 = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


def _distance_or_none(C: LinearCode) -> int | None:
    if C.k == 0:
        return None
    try:
        return C.min_distance()
    except TooLargeToEnumerate:
        return None


class CodeCatalog:
    def __init__(self, field: Field, codes: Iterable[LinearCode] = (), builtins: bool = True):
        self.field = field
        self.builtins = builtins
        self._codes: list[LinearCode] = []
        for C in codes:
            self.add(C)

    def add(self, C: LinearCode, d: int | None = None) -> None:
        if C.field != self.field:
            raise FieldMismatch(f"{C.field!r} vs catalog field {self.field!r}")
        if d is not None:
            C._min_dist = d
        self._codes.append(C)

    def __len__(self) -> int:
        return len(self._codes)

    def _builtin(self, n: int, k: int) -> list[LinearCode]:
        from .grs import mds_code

        F = self.field
        out = []
        if k == 0:
            out.append(LinearCode.zero(F, n))
        elif k == n:
            out.append(LinearCode.full(F, n))
        if k == 1:
            out.append(LinearCode(Matrix(F, np.ones((1, n), dtype=np.int64)), name=f"repetition-{n}"))
        if k == n - 1 and n >= 2:
            G = np.hstack([np.eye(n - 1, dtype=np.int64), np.full((n - 1, 1), F.neg(1), dtype=np.int64)])
            out.append(LinearCode(Matrix(F, G), name=f"parity-{n}"))
        if F.q == 2 and n == 7 and k == 4:
            out.append(LinearCode(Matrix(F, HAMMING_7_4), name="hamming-7-4"))
        if F.q == 2 and n == 7 and k == 3:
            out.append(LinearCode(Matrix(F, SIMPLEX_7_3), name="simplex-7-3"))
        if 0 < k < n and n <= F.q + 1:
            out.append(mds_code(F, n, k))
        return out

    def lookup(self, n: int, k: int) -> list[LinearCode]:
        found = [C for C in self._codes if C.n == n and C.k == k]
        if self.builtins:
            found += self._builtin(n, k)
        return found

    def best(self, n: int, k: int) -> LinearCode:
        """Code of largest known minimum distance among those stored for ``[n, k]``."""
        found = self.lookup(n, k)
        if not found:
            raise CatalogMiss(f"no [{n},{k}] code in the catalog")
        if k == 0:
            return found[0]
        return max(found, key=lambda C: _distance_or_none(C) or -1)

    def best_or_search(self, n: int, k: int, seed: int = 0, tries: int = 200) -> LinearCode:
        """``best(n, k)``, or else the best of a few seeded random codes."""
        try:
            return self.best(n, k)
        except CatalogMiss:
            pass
        if not 0 <= k <= n:
            raise ParameterOutOfRange(f"bad dimension {k} for length {n}")
        rng = np.random.default_rng(seed)
        F = self.field
        best, best_d = None, -1
        for _ in range(tries):
            G = np.hstack([np.eye(k, dtype=np.int64), rng.integers(0, F.q, size=(k, n - k))])
            C = LinearCode(Matrix(F, G), name=f"random-{n}-{k}")
            d = _distance_or_none(C) or 0
            if d > best_d:
                best, best_d = C, d
        assert best is not None
        return best

    # -- serialization -------------------------------------------------------------
    def to_json(self) -> dict:
        return {"q": self.field.to_json(), "codes": [C.to_json() for C in self._codes]}

    @classmethod
    def from_json(cls, obj: dict, builtins: bool = True) -> CodeCatalog:
        F = field_from_json(obj["q"])
        cat = cls(F, builtins=builtins)
        for rec in obj.get("codes", []):
            rec = dict(rec)
            rec.setdefault("q", obj["q"])
            C = LinearCode.from_json(rec)
            cat.add(C, d=rec.get("d"))
        return cat

    @classmethod
    def load(cls, path: str | Path, builtins: bool = True) -> CodeCatalog:
        return cls.from_json(json.loads(Path(path).read_text()), builtins=builtins)


def random_code(field: Field, n: int, k: int, rng: random.Random | np.random.Generator) -> LinearCode:
    """Uniform random generator of full rank ``k`` (retries until full rank)."""
    if isinstance(rng, random.Random):
        rng = np.random.default_rng(rng.randrange(1 << 32))
    if k == 0:
        return LinearCode.zero(field, n)
    while True:
        G = Matrix(field, rng.integers(0, field.q, size=(k, n)))
        if G.rank() == k:
            return LinearCode(G)
