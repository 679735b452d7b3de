"""The binary length-7 worked example: one pair of codes and three monomial twists.

``G1`` generates the [7,4,3] Hamming code and ``G2`` its [7,3,4] simplex
subcode, so the untwisted pair meets in dimension 3.  Multiplying ``G1`` by
the permutation matrices ``A1``, ``A2``, ``A3`` lowers the intersection to
2, 1 and 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import HAMMING_7_4, SIMPLEX_7_3
from .code import LinearCode, apply_monomial
from .gf import GF
from .matrix import Matrix
from .pairs import IntersectionPair, ell_by_rank

G1 = HAMMING_7_4
G2 = SIMPLEX_7_3

# row i of A is the unit vector e_{ROWS[i]}
A_ROWS = {
    "A1": [0, 1, 2, 3, 4, 6, 5],
    "A2": [1, 0, 2, 3, 4, 6, 5],
    "A3": [6, 0, 2, 3, 4, 1, 5],
}
EXPECTED = {"base": 3, "A1": 2, "A2": 1, "A3": 0}


def monomial(name: str) -> Matrix:
    F = GF(2)
    return Matrix(F, np.eye(7, dtype=np.int64)[A_ROWS[name]])


@dataclass
class ExampleRow:
    label: str
    expected: int
    by_rank: int
    by_intersection: int

    @property
    def ok(self) -> bool:
        return self.expected == self.by_rank == self.by_intersection


def example_pairs() -> dict[str, IntersectionPair]:
    F = GF(2)
    C1 = LinearCode(Matrix(F, G1), name="G1")
    C2 = LinearCode(Matrix(F, G2), name="G2")
    out = {"base": IntersectionPair.of(C1, C2)}
    for name in A_ROWS:
        A = monomial(name)
        out[name] = IntersectionPair.of(apply_monomial(C1, A), C2, monomial=A, provenance={"twist": name})
    return out


def reproduce_example() -> list[ExampleRow]:
    rows = []
    for label, pair in example_pairs().items():
        rows.append(ExampleRow(label, EXPECTED[label], ell_by_rank(pair.c1, pair.c2), pair.ell))
    return rows
