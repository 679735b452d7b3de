"""Linear codes held by their canonical (RREF) generator matrix."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .errors import (
    EmptyMatrix,
    FieldMismatch,
    LengthMismatch,
    NotMonomial,
    TooLargeToEnumerate,
    ZeroCode,
)
from .gf import Field
from .matrix import Matrix, kernel, monomial_parts, row_basis

# Largest message space enumerated by min_distance (either side).
ENUMERATION_LIMIT = 1 << 22
_BLOCK = 1 << 16


@dataclass(frozen=True)
class CodeSummary:
    n: int
    k: int
    d: int | None
    q: int
    mds: bool


class LinearCode:
    """A linear ``[n, k]`` code over ``field``.

    The generator is always stored in reduced row-echelon form, so two
    codes are equal exactly when their ``gen`` matrices are equal.  The
    parity-check matrix and minimum distance are computed on first use;
    recomputation is harmless, so concurrent readers need no locking.
    """

    def __init__(self, gen: Matrix, name: str | None = None):
        if gen.cols == 0:
            raise EmptyMatrix("a code needs at least one coordinate")
        self.gen = row_basis(gen)
        self.field: Field = gen.field
        self.n = gen.cols
        self.k = self.gen.rows
        self.name = name
        self._min_dist: int | None = None

    # -- construction helpers ------------------------------------------------------
    @classmethod
    def zero(cls, field: Field, n: int) -> LinearCode:
        return cls(Matrix.empty(field, n), name=f"zero-{n}")

    @classmethod
    def full(cls, field: Field, n: int) -> LinearCode:
        return cls(Matrix.identity(field, n), name=f"full-{n}")

    @classmethod
    def from_json(cls, obj: dict) -> LinearCode:
        from .gf import field_from_json

        field = field_from_json(obj["q"])
        gen = Matrix.from_json(field, obj["generator"])
        code = cls(gen, name=obj.get("name"))
        if "n" in obj and int(obj["n"]) != code.n:
            raise LengthMismatch(f"record says n={obj['n']}, generator has {code.n} columns")
        if "k" in obj and int(obj["k"]) != code.k:
            raise ValueError(f"record says k={obj['k']}, generator has rank {code.k}")
        return code

    def to_json(self) -> dict:
        out = {"q": self.field.to_json(), "n": self.n, "k": self.k, "generator": self.gen.to_json()}
        if self.name:
            out["name"] = self.name
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCode) and self.field == other.field and self.gen == other.gen

    def __hash__(self) -> int:
        return hash(self.gen)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}]_{self.field.q}>"

    # -- derived objects -------------------------------------------------------------
    @cached_property
    def parity(self) -> Matrix:
        return row_basis(kernel(self.gen))

    def dual(self) -> LinearCode:
        return LinearCode(self.parity) if self.k < self.n else LinearCode.zero(self.field, self.n)

    def contains(self, vectors) -> bool:
        """True iff every row of ``vectors`` lies in the code."""
        V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        if self.k == self.n:
            return True
        syn = (Matrix(self.field, V) @ self.parity.T).data
        return not syn.any()

    def is_subcode_of(self, other: LinearCode) -> bool:
        _check_compatible(self, other)
        return self.k == 0 or other.contains(self.gen.data)

    def min_distance(self, method: str = "auto", limit: int = ENUMERATION_LIMIT) -> int:
        if self._min_dist is None:
            self._min_dist = min_distance(self, method=method, limit=limit)
        return self._min_dist

    def summary(self, method: str = "auto") -> CodeSummary:
        d = self.min_distance(method) if self.k else None
        return CodeSummary(self.n, self.k, d, self.field.q, d == self.n - self.k + 1)


def _check_compatible(C1: LinearCode, C2: LinearCode) -> None:
    if C1.field != C2.field:
        raise FieldMismatch(f"{C1.field!r} vs {C2.field!r}")
    if C1.n != C2.n:
        raise LengthMismatch(f"lengths differ: {C1.n} vs {C2.n}")


def code_from_generator(field: Field, G: Matrix, name: str | None = None) -> LinearCode:
    if G.field != field:
        raise FieldMismatch(f"{G.field!r} vs {field!r}")
    return LinearCode(G, name=name)


def parity_check(C: LinearCode) -> Matrix:
    """Full-rank (n-k) x n parity-check matrix in RREF."""
    return C.parity


def dual(C: LinearCode) -> LinearCode:
    return C.dual()


def galois_dual(C: LinearCode, h: int) -> LinearCode:
    """Dual under ``<u, v>_h = sum u_i v_i^(p^h)``; ``h = 0`` is Euclidean, ``h = e/2`` Hermitian."""
    F = C.field
    twisted = Matrix(F, F.vfrobenius(C.gen.data, h))
    if C.k == 0:
        return LinearCode.full(F, C.n)
    K = kernel(twisted)
    return LinearCode(K) if K.rows else LinearCode.zero(F, C.n)


def intersect(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """Kernel of the stacked parity checks."""
    _check_compatible(C1, C2)
    H = C1.parity.vstack(C2.parity)
    if H.rows == 0:
        return LinearCode.full(C1.field, C1.n)
    K = kernel(H)
    return LinearCode(K) if K.rows else LinearCode.zero(C1.field, C1.n)


def code_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    _check_compatible(C1, C2)
    return LinearCode(C1.gen.vstack(C2.gen))


def hull_dim(C: LinearCode) -> int:
    return intersect(C, C.dual()).k


def hull_dim_by_rank(C: LinearCode) -> tuple[int, int]:
    """``(k - rank(G G^t), n - k - rank(H H^t))``; both equal the hull dimension."""
    G, H = C.gen, C.parity
    via_g = C.k - (G @ G.T).rank() if C.k else 0
    via_h = (C.n - C.k) - (H @ H.T).rank() if H.rows else 0
    return via_g, via_h


def apply_monomial(C: LinearCode, A: Matrix) -> LinearCode:
    """The equivalent code ``{c A : c in C}`` for a weighted permutation matrix ``A``."""
    if A.field != C.field:
        raise FieldMismatch(f"{A.field!r} vs {C.field!r}")
    if A.rows != C.n or monomial_parts(A) is None:
        raise NotMonomial("expected an n x n weighted permutation matrix")
    if C.k == 0:
        return LinearCode.zero(C.field, C.n)
    out = LinearCode(C.gen @ A, name=C.name)
    out._min_dist = C._min_dist
    return out


# -- enumeration ----------------------------------------------------------------------

def codeword_blocks(gen: Matrix) -> Iterator[np.ndarray]:
    """Yield all ``q^k`` codewords spanned by the rows of ``gen`` in chunks of at most 2^16."""
    F = gen.field
    k, n = gen.shape
    q = F.q
    m = k
    while m > 0 and q**m > _BLOCK:
        m -= 1
    head, tail = gen.data[: k - m], gen.data[k - m :]
    scalars = np.arange(q, dtype=np.int64)[:, None]
    block = np.zeros((1, n), dtype=np.int64)
    for row in tail:
        scaled = F.vmul(scalars, row[None, :])
        block = F.vadd(block[:, None, :], scaled[None, :, :]).reshape(-1, n)
    if head.shape[0] == 0:
        yield block
        return
    for coeffs in itertools.product(range(q), repeat=head.shape[0]):
        offset = np.zeros(n, dtype=np.int64)
        for c, row in zip(coeffs, head):
            if c:
                offset = F.vadd(offset, F.vmul(c, row))
        yield F.vadd(block, offset[None, :])


def weight_distribution(C: LinearCode, limit: int = ENUMERATION_LIMIT) -> list[int]:
    """Number of codewords of each Hamming weight 0..n, by direct enumeration."""
    if C.field.q**C.k > limit:
        raise TooLargeToEnumerate(f"q^k = {C.field.q}^{C.k} exceeds {limit}")
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for block in codeword_blocks(C.gen):
        counts += np.bincount((block != 0).sum(axis=1), minlength=C.n + 1)
    return counts.tolist()


def _krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(0, j + 1)
    )


def macwilliams(dual_weights: list[int], n: int, q: int) -> list[int]:
    """Weight distribution of a code from that of its dual."""
    size = sum(dual_weights)
    out = []
    for j in range(n + 1):
        total = sum(b * _krawtchouk(j, i, n, q) for i, b in enumerate(dual_weights) if b)
        assert total % size == 0
        out.append(total // size)
    return out


def min_distance(C: LinearCode, method: str = "auto", limit: int = ENUMERATION_LIMIT) -> int:
    """Minimum Hamming weight of a nonzero codeword.

    ``method="direct"`` enumerates the ``q^k`` codewords; ``"dual"``
    enumerates the ``q^(n-k)`` dual codewords and applies the MacWilliams
    identities.  ``"auto"`` picks whichever side is smaller.
    """
    if C.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    q = C.field.q
    direct_cost, dual_cost = q**C.k, q ** (C.n - C.k)
    if method == "auto":
        method = "direct" if direct_cost <= dual_cost else "dual"
    if method == "direct":
        if direct_cost > limit:
            raise TooLargeToEnumerate(f"q^k = {q}^{C.k} exceeds {limit}")
        best = C.n
        for block in codeword_blocks(C.gen):
            w = (block != 0).sum(axis=1)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
        return best
    if method == "dual":
        if dual_cost > limit:
            raise TooLargeToEnumerate(f"q^(n-k) = {q}^{C.n - C.k} exceeds {limit}")
        if C.k == C.n:
            return 1
        A = macwilliams(weight_distribution(C.dual(), limit), C.n, q)
        return next(j for j in range(1, C.n + 1) if A[j])
    raise ValueError(f"unknown method {method!r}")


def is_mds_by_columns(C: LinearCode) -> bool:
    """MDS test without enumeration: every k columns of the generator are independent."""
    if C.k in (0, C.n):
        return True
    G = C.gen
    for cols in itertools.combinations(range(C.n), C.k):
        if G.submatrix(range(C.k), cols).rank() < C.k:
            return False
    return True
