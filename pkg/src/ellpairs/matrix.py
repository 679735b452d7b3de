"""Dense exact linear algebra over a finite field.

A :class:`Matrix` wraps a read-only ``int64`` numpy array of element
encodings together with its :class:`~ellpairs.gf.Field`.  Row operations are
vectorised through the field's ``v*`` methods, which is plenty for the
matrix sizes this package deals with (tens of rows and columns).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotAPermutation,
    NotDistinct,
    RepeatedNode,
    SingularCell,
    SingularMatrix,
    TooLargeForExhaustiveCheck,
    ZeroWeight,
)
from .gf import Field

SUPER_REGULAR_CUTOFF = 6


class Matrix:
    __slots__ = ("field", "data", "_rref")

    def __init__(self, field: Field, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries out of range for {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr
        self._rref = None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def empty(cls, field: Field, cols: int) -> Matrix:
        """A 0 x cols matrix."""
        return cls(field, np.zeros((0, cols), dtype=np.int64))

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> Matrix:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
        arr = np.array(entries, dtype=np.int64).reshape(rows, cols)
        return cls(field, arr)

    # -- queries -------------------------------------------------------------------
    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx):
        return self.data[idx]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.data.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.data.tolist()}

    def is_zero(self) -> bool:
        return not self.data.any()

    # -- algebra -----------------------------------------------------------------------
    def _same(self, other: Matrix) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.data.T)

    def transpose(self) -> Matrix:
        return self.T

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return Matrix(self.field, self.field.vadd(self.data, other.data))

    def scale_rows(self, weights: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.field.vmul(self.data, np.asarray(weights)[:, None]))

    def vstack(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.cols != other.cols:
            raise DimensionMismatch(f"cannot stack {self.shape} on {other.shape}")
        return Matrix(self.field, np.vstack([self.data, other.data]))

    def hstack(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.rows != other.rows:
            raise DimensionMismatch(f"cannot join {self.shape} with {other.shape}")
        return Matrix(self.field, np.hstack([self.data, other.data]))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.data[np.ix_(list(rows), list(cols))])

    def select_rows(self, rows: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.data[list(rows), :].reshape(len(rows), self.cols))

    def map(self, fn) -> Matrix:
        return Matrix(self.field, np.vectorize(fn, otypes=[np.int64])(self.data) if self.data.size else self.data)

    # -- elimination ---------------------------------------------------------------------
    def rref(self) -> tuple[Matrix, int, list[int]]:
        if self._rref is None:
            self._rref = _rref(self.field, self.data)
        return self._rref

    def rank(self) -> int:
        return self.rref()[1]

    def kernel(self) -> Matrix:
        return kernel(self)

    def det(self) -> int:
        return det(self)

    def inverse(self) -> Matrix:
        return inverse(self)


def _rref(field: Field, data: np.ndarray) -> tuple[Matrix, int, list[int]]:
    A = data.copy()
    m, n = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = field.vmul(A[r], field.inv(lead))
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = field.vsub(A[others], field.vmul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    R = Matrix(field, A)
    R._rref = (R, r, pivots)
    return R, r, pivots


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns (zero rows kept at the bottom)."""
    return M.rref()


def rank(M: Matrix) -> int:
    return M.rank()


def row_basis(M: Matrix) -> Matrix:
    """The nonzero rows of rref(M): a canonical basis of the row space."""
    R, r, _ = M.rref()
    return Matrix(M.field, R.data[:r])


def kernel(M: Matrix) -> Matrix:
    """Basis (as rows) of the right null space ``{v : M v^t = 0}``."""
    F = M.field
    R, r, pivots = M.rref()
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for i, pc in enumerate(pivots):
            K[t, pc] = F.neg(int(R.data[i, f]))
    return Matrix(F, K)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    A._same(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    if F.e == 1:
        return Matrix(F, (A.data @ B.data) % F.p)
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    for t in range(A.cols):
        out = F.vadd(out, F.vmul(A.data[:, t][:, None], B.data[t][None, :]))
    return Matrix(F, out)


def transpose(A: Matrix) -> Matrix:
    return A.T


def det(M: Matrix) -> int:
    """Determinant by Gaussian elimination (exact in the field)."""
    if M.rows != M.cols:
        raise DimensionMismatch(f"determinant of non-square {M.shape}")
    F = M.field
    A = M.data.copy()
    n = M.rows
    acc = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            acc = F.neg(acc)
        lead = int(A[c, c])
        acc = F.mul(acc, lead)
        below = np.arange(c + 1, n)
        if below.size:
            factors = F.vmul(A[below, c], F.inv(lead))
            A[below] = F.vsub(A[below], F.vmul(factors[:, None], A[c][None, :]))
    return acc


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise DimensionMismatch(f"inverse of non-square {M.shape}")
    n = M.rows
    R, r, _ = M.hstack(Matrix.identity(M.field, n)).rref()
    if r < n or not np.array_equal(R.data[:, :n], np.eye(n, dtype=np.int64)):
        raise SingularMatrix("matrix is not invertible")
    return Matrix(M.field, R.data[:, n:])


# -- structured matrices ------------------------------------------------------------------

def weighted_permutation(field: Field, n: int, perm: Sequence[int], weights: Sequence[int] | None = None) -> Matrix:
    """Monomial matrix with ``weights[i]`` at ``(i, perm[i])``."""
    perm = [int(x) for x in perm]
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotAPermutation(f"{perm} is not a permutation of 0..{n - 1}")
    weights = [1] * n if weights is None else [field.check(int(w)) for w in weights]
    if len(weights) != n:
        raise DimensionMismatch("one weight per row is required")
    if any(w == 0 for w in weights):
        raise ZeroWeight("weighted permutation matrices need nonzero weights")
    A = np.zeros((n, n), dtype=np.int64)
    A[np.arange(n), perm] = weights
    return Matrix(field, A)


def monomial_parts(A: Matrix) -> tuple[list[int], list[int]] | None:
    """``(perm, weights)`` if ``A`` is a weighted permutation matrix, else ``None``."""
    if A.rows != A.cols:
        return None
    nz = A.data != 0
    if not (np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1)):
        return None
    perm = np.argmax(nz, axis=1).tolist()
    weights = A.data[np.arange(A.rows), perm].tolist()
    return perm, weights


def cauchy(field: Field, x: Sequence[int], y: Sequence[int]) -> Matrix:
    """Cauchy matrix with entries ``1 / (x_i + y_j)``."""
    x = [field.check(int(v)) for v in x]
    y = [field.check(int(v)) for v in y]
    if len(set(x)) != len(x) or len(set(y)) != len(y):
        raise RepeatedNode("Cauchy nodes must be distinct within x and within y")
    A = np.zeros((len(x), len(y)), dtype=np.int64)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            s = field.add(xi, yj)
            if s == 0:
                raise SingularCell(f"x[{i}] + y[{j}] = 0")
            A[i, j] = field.inv(s)
    return Matrix(field, A)


def cauchy_det(field: Field, x: Sequence[int], y: Sequence[int]) -> int:
    """Closed-form Cauchy determinant."""
    F = field
    x = [F.check(int(v)) for v in x]
    y = [F.check(int(v)) for v in y]
    n = len(x)
    num = 1
    for i in range(n):
        for j in range(i + 1, n):
            num = F.mul(num, F.mul(F.sub(x[j], x[i]), F.sub(y[j], y[i])))
    den = 1
    for i in range(n):
        for j in range(n):
            den = F.mul(den, F.add(x[i], y[j]))
    return F.div(num, den)


def vandermonde(field: Field, a: Sequence[int]) -> Matrix:
    """Square Vandermonde matrix with ``(i, j)`` entry ``a_i ** j``."""
    a = [field.check(int(v)) for v in a]
    n = len(a)
    return Matrix(field, [[field.pow(ai, j) for j in range(n)] for ai in a])


def vandermonde_superregular(field: Field, a: Sequence[int], b: Sequence[int]) -> Matrix:
    """Super-regular matrix built from two Vandermonde matrices on 2n distinct nodes.

    The nodes index the columns here (row ``j`` holds the ``j``-th powers),
    i.e. the product is ``W(a)^-1 W(b)`` with ``W = vandermonde(.)^t``.
    With nodes on the rows instead, ``V(a)^-1 V(b)`` can contain zero
    entries (``a=(0,1), b=(2,3)`` over GF(5) already does).
    """
    a = [field.check(int(v)) for v in a]
    b = [field.check(int(v)) for v in b]
    if len(a) != len(b):
        raise DimensionMismatch("a and b must have the same length")
    if len(set(a) | set(b)) != 2 * len(a):
        raise NotDistinct("the 2n nodes a_i, b_j must be pairwise distinct")
    Wa = vandermonde(field, a).T
    Wb = vandermonde(field, b).T
    return inverse(Wa) @ Wb


def is_super_regular(M: Matrix) -> bool:
    """True iff every square submatrix of ``M`` is nonsingular."""
    m, n = M.shape
    s_max = min(m, n)
    if s_max > SUPER_REGULAR_CUTOFF:
        raise TooLargeForExhaustiveCheck(
            f"exhaustive minor check limited to size {SUPER_REGULAR_CUTOFF}, got {s_max}"
        )
    if np.any(M.data == 0):
        return False
    for s in range(2, s_max + 1):
        for rows in itertools.combinations(range(m), s):
            for cols in itertools.combinations(range(n), s):
                if det(M.submatrix(rows, cols)) == 0:
                    return False
    return True


def matrix_from_rows(field: Field, rows: Iterable[Iterable[int]], cols: int | None = None) -> Matrix:
    rows = [list(r) for r in rows]
    if not rows:
        return Matrix.empty(field, cols or 0)
    return Matrix(field, rows)
