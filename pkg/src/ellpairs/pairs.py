"""Linear l-intersection pairs: characterisation, bounds, tuning and propagation.

The dimension of ``C1 ∩ C2`` can be read off generator and parity-check
matrices alone: ``l = k1 - rank(G1 H2^t) = k2 - rank(G2 H1^t)``, whatever
bases are chosen.  Everything here builds on that identity together with
the fact that applying a weighted permutation to one code keeps its
parameters but moves the intersection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .code import LinearCode, _check_compatible, apply_monomial, intersect
from .errors import (
    CertificationError,
    DimensionMismatch,
    GammaOutOfRange,
    IndexOutOfRange,
    InvalidDims,
    NotFoundWithinBudget,
    NotSuperRegular,
    SearchSpaceTooLarge,
)
from .matrix import Matrix, is_super_regular, weighted_permutation

DEFAULT_BUDGET = 10_000


@dataclass
class IntersectionPair:
    c1: LinearCode
    c2: LinearCode
    ell: int
    monomial: Optional[Matrix] = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_compatible(self.c1, self.c2)
        lo, hi = ell_bounds(self.n, self.c1.k, self.c2.k)
        if not lo <= self.ell <= hi:
            raise InvalidDims(f"l={self.ell} outside [{lo}, {hi}]")

    @classmethod
    def of(cls, c1: LinearCode, c2: LinearCode, **kw) -> IntersectionPair:
        """Build a pair, computing l from the intersection."""
        return cls(c1, c2, intersect(c1, c2).k, **kw)

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def field(self):
        return self.c1.field

    def to_json(self) -> dict:
        out = {"c1": self.c1.to_json(), "c2": self.c2.to_json(), "ell": self.ell}
        if self.monomial is not None:
            out["monomial"] = self.monomial.to_json()
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, obj: dict) -> IntersectionPair:
        c1 = LinearCode.from_json(obj["c1"])
        c2 = LinearCode.from_json(obj["c2"])
        mono = Matrix.from_json(c1.field, obj["monomial"]) if obj.get("monomial") else None
        pair = cls.of(c1, c2, monomial=mono, provenance=dict(obj.get("provenance", {})))
        if "ell" in obj and int(obj["ell"]) != pair.ell:
            raise CertificationError(f"stored l={obj['ell']} but the codes meet in dimension {pair.ell}")
        return pair


def _product_rank(A: Matrix, B: Matrix) -> int:
    if A.rows == 0 or B.rows == 0:
        return 0
    return (A @ B.T).rank()


def ell_by_rank(C1: LinearCode, C2: LinearCode) -> int:
    """``k1 - rank(G1 H2^t)``, cross-checked against ``k2 - rank(G2 H1^t)``."""
    _check_compatible(C1, C2)
    a = C1.k - _product_rank(C1.gen, C2.parity)
    b = C2.k - _product_rank(C2.gen, C1.parity)
    if a != b:
        raise CertificationError(f"rank routes disagree: {a} != {b}")
    return a


def ell_routes(C1: LinearCode, C2: LinearCode) -> dict[str, int]:
    """All three ways of computing l, for reporting."""
    _check_compatible(C1, C2)
    return {
        "k1-rank(G1 H2^t)": C1.k - _product_rank(C1.gen, C2.parity),
        "k2-rank(G2 H1^t)": C2.k - _product_rank(C2.gen, C1.parity),
        "dim(C1 ∩ C2)": intersect(C1, C2).k,
    }


def ell_bounds(n: int, k1: int, k2: int) -> tuple[int, int]:
    if not (0 <= k1 <= n and 0 <= k2 <= n):
        raise InvalidDims(f"need 0 <= k1, k2 <= n, got n={n}, k1={k1}, k2={k2}")
    return max(0, k1 + k2 - n), min(k1, k2)


def classify(pair: IntersectionPair) -> str:
    """One of ``"LCD-config"``, ``"LCP"``, ``"hull-config"``, ``"generic"``."""
    is_dual = pair.c2 == pair.c1.dual()
    if pair.ell == 0 and is_dual:
        return "LCD-config"
    if pair.ell == 0 and pair.c1.k + pair.c2.k == pair.n:
        return "LCP"
    if is_dual:
        return "hull-config"
    return "generic"


def tune_by_monomial(
    C1: LinearCode,
    C2: LinearCode,
    target_ell: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> tuple[Matrix, IntersectionPair]:
    """Search weighted permutations ``A`` until ``C1 A`` meets ``C2`` in dimension ``target_ell``.

    Trial 0 is the identity; later trials draw a uniform permutation and
    uniform nonzero weights from ``random.Random(seed)``, so the outcome is
    reproducible.  Raises :class:`NotFoundWithinBudget` after ``budget``
    trials, which says nothing about existence.
    """
    _check_compatible(C1, C2)
    n, q = C1.n, C1.field.q
    lo, hi = ell_bounds(n, C1.k, C2.k)
    if not lo <= target_ell <= hi:
        raise InvalidDims(f"target l={target_ell} outside [{lo}, {hi}]")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    F = C1.field
    G1 = C1.gen.data
    H2t = C2.parity.T
    rng = random.Random(seed)
    for trial in range(budget):
        if trial == 0:
            perm, weights = list(range(n)), [1] * n
        else:
            perm = list(range(n))
            rng.shuffle(perm)
            weights = [rng.randrange(1, q) for _ in range(n)]
        if C1.k == 0 or H2t.cols == 0:
            r = 0
        else:
            GA = np.zeros_like(G1)
            GA[:, perm] = F.vmul(G1, np.asarray(weights)[None, :])
            r = (Matrix(F, GA) @ H2t).rank()
        if C1.k - r == target_ell:
            A = weighted_permutation(F, n, perm, weights)
            pair = IntersectionPair(
                apply_monomial(C1, A), C2, target_ell, monomial=A,
                provenance={"construction": "monomial", "trial": trial, "seed": seed},
            )
            return A, pair
    raise NotFoundWithinBudget(f"no weighted permutation gave l={target_ell} in {budget} trials")


def _extend_basis(base: Matrix, pool: Matrix) -> Matrix:
    """Rows of ``pool`` (in order) that extend the independent rows of ``base`` to a basis."""
    current = base
    rank = base.rank()
    keep = []
    for i in range(pool.rows):
        trial = current.vstack(pool.select_rows([i]))
        r = trial.rank()
        if r > rank:
            keep.append(i)
            current, rank = trial, r
    return pool.select_rows(keep)


def _intersection_bases(pair: IntersectionPair) -> tuple[Matrix, Matrix, Matrix]:
    """``(B, X1, X2)``: intersection basis and its completions inside C1 and C2."""
    B = intersect(pair.c1, pair.c2).gen
    return B, _extend_basis(B, pair.c1.gen), _extend_basis(B, pair.c2.gen)


def _span(field, rows: Matrix, n: int) -> LinearCode:
    return LinearCode(rows) if rows.rows else LinearCode.zero(field, n)


def reduce_ell(pair: IntersectionPair, gamma: int) -> IntersectionPair:
    """Shrink C2 by dropping ``l - gamma`` intersection basis vectors.

    Result: C1 unchanged, ``dim C2' = k2 - l + gamma`` and ``C1 ∩ C2'`` has
    dimension ``gamma``.  ``C2'`` is a subcode of C2, so its distance can
    only grow.
    """
    if not 0 <= gamma <= pair.ell:
        raise GammaOutOfRange(f"gamma must lie in [0, {pair.ell}], got {gamma}")
    if gamma == pair.ell:
        return pair
    F, n = pair.field, pair.n
    B, _, X2 = _intersection_bases(pair)
    drop = pair.ell - gamma
    rows = B.select_rows(range(drop, B.rows)).vstack(X2)
    c2 = _span(F, rows, n)
    out = IntersectionPair.of(pair.c1, c2, provenance={**pair.provenance, "reduced_from": pair.ell})
    if out.ell != gamma or c2.k != pair.c2.k - drop:
        raise CertificationError("reduction produced unexpected parameters")
    return out


def extend_length(pair: IntersectionPair, gamma: int) -> IntersectionPair:
    """Lengthen both codes by ``l - gamma`` coordinates, lowering l by one per coordinate.

    Each step appends a 0 to every basis vector of C1 and to every basis
    vector of C2 except the last intersection vector, which gets a 1.
    """
    if not 0 <= gamma <= pair.ell:
        raise GammaOutOfRange(f"gamma must lie in [0, {pair.ell}], got {gamma}")
    F = pair.field
    cur = pair
    while cur.ell > gamma:
        n = cur.n
        B, X1, X2 = _intersection_bases(cur)
        B1 = B.vstack(X1)
        B2 = B.vstack(X2)
        tail1 = np.zeros((B1.rows, 1), dtype=np.int64)
        tail2 = np.zeros((B2.rows, 1), dtype=np.int64)
        tail2[B.rows - 1, 0] = 1
        c1 = LinearCode(Matrix(F, np.hstack([B1.data, tail1])), name=pair.c1.name)
        c2 = LinearCode(Matrix(F, np.hstack([B2.data, tail2])), name=pair.c2.name)
        nxt = IntersectionPair.of(c1, c2, provenance={**pair.provenance, "extended_from": pair.ell})
        if nxt.ell != cur.ell - 1 or nxt.n != n + 1:
            raise CertificationError("extension step produced unexpected parameters")
        cur = nxt
    return cur


def pair_from_superregular(A: Matrix, i: int, j: int, ell: int, verify: bool = True) -> IntersectionPair:
    """MDS pair ``[n, i]`` and ``[n, j + ell]`` from the rows of a super-regular ``A``.

    C1 is spanned by rows ``0..i-1``; C2 by rows ``0..ell-1`` together with
    rows ``i..i+j-1``.  Rows of a nonsingular matrix are independent, so the
    intersection is spanned by the ``ell`` shared rows.
    """
    if A.rows != A.cols:
        raise DimensionMismatch(f"expected a square matrix, got {A.shape}")
    n = A.rows
    if not (0 <= i <= n and 0 <= j <= n - i and 0 <= ell <= i):
        raise IndexOutOfRange(f"need 0<=i<=n, 0<=j<=n-i, 0<=ell<=i; got i={i}, j={j}, ell={ell}")
    if verify and not is_super_regular(A):
        raise NotSuperRegular("matrix has a singular square submatrix")
    F = A.field
    c1 = _span(F, A.select_rows(range(i)), n)
    c2 = _span(F, A.select_rows(list(range(ell)) + list(range(i, i + j))), n)
    return IntersectionPair.of(c1, c2, provenance={"construction": "super-regular", "i": i, "j": j})


@dataclass
class Witness:
    ell: int
    route: str
    pair: IntersectionPair


def conjecture_probe(
    q: int,
    n: int,
    k1: int,
    k2: int,
    seed: int = 0,
    budget: int = 2000,
    catalog=None,
) -> dict[int, Optional[Witness]]:
    """Try to exhibit an l-intersection pair for every l allowed by the dimension bounds.

    Uses the GRS constructions when ``3 <= q`` and ``n <= q + 1``, falling
    back to monomial tuning of two fixed seed codes.  ``None`` means "no witness
    found", never "does not exist".
    """
    from .catalog import CodeCatalog
    from .errors import DegreeConditionViolated
    from .gf import field_of_order
    from .grs import grs_pair, grs_pair_by_scaling

    if q not in (2, 3, 4) or n > 8:
        raise SearchSpaceTooLarge(f"probe limited to q in (2, 3, 4) and n <= 8, got q={q}, n={n}")
    lo, hi = ell_bounds(n, k1, k2)
    F = field_of_order(q)
    catalog = catalog or CodeCatalog(F)
    seeds = None
    out: dict[int, Optional[Witness]] = {}
    for ell in range(lo, hi + 1):
        found = None
        if q >= 3 and n <= q + 1:
            try:
                found = Witness(ell, "grs", grs_pair(F, n, k1, k2, ell))
            except DegreeConditionViolated:
                if 0 < k1 < n and 0 < k2 < n and k1 + k2 <= n + ell:
                    try:
                        found = Witness(ell, "scaled-grs", grs_pair_by_scaling(F, n, k1, k2, ell, seed=seed))
                    except NotFoundWithinBudget:
                        pass
        if found is None:
            if seeds is None:
                seeds = (catalog.best_or_search(n, k1, seed), catalog.best_or_search(n, k2, seed))
            try:
                _, pair = tune_by_monomial(seeds[0], seeds[1], ell, budget=budget, seed=seed)
                found = Witness(ell, "monomial", pair)
            except NotFoundWithinBudget:
                pass
        out[ell] = found
    return out
