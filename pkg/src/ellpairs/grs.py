"""Generalized Reed-Solomon codes parameterized by a denominator polynomial.

``GRS(a, P, v)`` is the set of words ``(v_i f(a_i) / P(a_i))_i`` with
``deg f < deg P``.  Its dimension is ``deg P`` and it is MDS.  The extended
variant appends the coordinate ``v_n (x f / P)(inf)``, which is nonzero only
for ``deg f = deg P - 1``.

Two such codes on the same points meet in ``GRS(a, gcd(P, Q), v)`` and add
up to ``GRS(a, lcm(P, Q), v)`` under the degree conditions checked below.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .code import LinearCode, code_sum, intersect
from .errors import (
    CertificationError,
    DegreeConditionViolated,
    DegreeTooLarge,
    LcmDegreeTooLarge,
    NoRootFreeFactor,
    NotFoundWithinBudget,
    NotDistinct,
    ParameterOutOfRange,
    RootAtEvaluationPoint,
    TheoremPreconditionViolated,
    ZeroInput,
)
from .gf import Field
from .matrix import Matrix
from .pairs import IntersectionPair
from .poly import Poly, irreducibles, monic_polys, poly_gcd, poly_lcm


@dataclass(frozen=True)
class GrsSpec:
    field: Field
    a: tuple
    v: tuple
    P: Poly
    extended: bool = False

    @classmethod
    def make(cls, field: Field, P: Poly, a: Sequence[int], v: Sequence[int] | None = None,
             extended: bool = False) -> GrsSpec:
        n = len(a) + (1 if extended else 0)
        v = tuple(v) if v is not None else (1,) * n
        return cls(field, tuple(int(x) for x in a), tuple(int(x) for x in v), P, extended)

    @property
    def n(self) -> int:
        return len(self.a) + (1 if self.extended else 0)

    @property
    def k(self) -> int:
        return max(int(self.P.degree), 0)

    def with_poly(self, P: Poly) -> GrsSpec:
        return replace(self, P=P)

    def validate(self) -> None:
        F, n = self.field, self.n
        for x in self.a + self.v:
            F.check(x)
        if len(set(self.a)) != len(self.a):
            raise NotDistinct("evaluation points must be pairwise distinct")
        if len(self.v) != n:
            raise ParameterOutOfRange(f"need {n} multipliers, got {len(self.v)}")
        if any(x == 0 for x in self.v):
            raise ParameterOutOfRange("multipliers must be nonzero")
        if n > F.q + (1 if self.extended else 0) or n == 0:
            raise ParameterOutOfRange(f"length {n} not allowed over GF({F.q})")
        if self.P.is_zero():
            raise ZeroInput("P must be nonzero")
        if self.P.degree > n:
            raise DegreeTooLarge(f"deg P = {self.P.degree} exceeds n = {n}")
        for x in self.a:
            if self.P(x) == 0:
                raise RootAtEvaluationPoint(f"P vanishes at {x}")

    def to_json(self) -> dict:
        return {"q": self.field.q, "a": list(self.a), "v": list(self.v),
                "P": self.P.to_json(), "extended": self.extended}


def _generator(spec: GrsSpec) -> np.ndarray:
    F = spec.field
    n, k = spec.n, spec.k
    a = np.asarray(spec.a, dtype=np.int64)
    v = np.asarray(spec.v, dtype=np.int64)
    # column scale v_i / P(a_i)
    scale = F.vmul(v[: len(a)], F.vinv(np.asarray([spec.P(x) for x in spec.a], dtype=np.int64)))
    G = np.zeros((k, n), dtype=np.int64)
    power = np.ones(len(a), dtype=np.int64)
    for j in range(k):
        G[j, : len(a)] = F.vmul(scale, power)
        power = F.vmul(power, a)
    if spec.extended and k:
        G[k - 1, n - 1] = F.mul(spec.v[-1], F.inv(spec.P.lead))
    return G


@functools.lru_cache(maxsize=4096)
def _build(spec: GrsSpec) -> LinearCode:
    # codes are never mutated after construction, so sharing cached instances is safe
    spec.validate()
    F = spec.field
    tag = "GRSext" if spec.extended else "GRS"
    name = f"{tag}[{spec.n},{spec.k}]_{F.q}(P={spec.P})"
    if spec.k == 0:
        out = LinearCode.zero(F, spec.n)
        out.name = name
        return out
    return LinearCode(Matrix(F, _generator(spec)), name=name)


def grs_code(spec: GrsSpec) -> LinearCode:
    """``GRS(a, P, v)`` of length ``|a|`` and dimension ``deg P``."""
    if spec.extended:
        raise ParameterOutOfRange("use grs_extended_code for an extended GrsSpec")
    return _build(spec)


def grs_extended_code(spec: GrsSpec) -> LinearCode:
    """``GRS_inf(a, P, v)`` of length ``|a| + 1``."""
    if not spec.extended:
        raise ParameterOutOfRange("GrsSpec is not marked extended")
    return _build(spec)


def grs(spec: GrsSpec) -> LinearCode:
    return _build(spec)


# -- theorem checks ---------------------------------------------------------------------

@dataclass
class TheoremCheck:
    lhs: LinearCode
    rhs: LinearCode
    equal: bool


def _shared(specP: GrsSpec, specQ: GrsSpec) -> None:
    if (specP.field, specP.a, specP.v, specP.extended) != (specQ.field, specQ.a, specQ.v, specQ.extended):
        raise ParameterOutOfRange("both GrsSpec inputs must share field, points, multipliers and the extended flag")


def _root_free(spec: GrsSpec, f: Poly) -> bool:
    return all(f(x) != 0 for x in spec.a)


def grs_intersection_theorem_check(specP: GrsSpec, specQ: GrsSpec) -> TheoremCheck:
    """Compare ``GRS(P) ∩ GRS(Q)`` with ``GRS(gcd(P, Q))``.

    Conditions: (1) L = gcd(P, Q); (2) P Q has no root among the points;
    (3) ``deg P + deg Q <= n + deg L``.  Failing ones are listed in the
    raised :class:`TheoremPreconditionViolated`.
    """
    _shared(specP, specQ)
    P, Q = specP.P, specQ.P
    failed = []
    if P.is_zero() or Q.is_zero():
        failed.append(1)
        raise TheoremPreconditionViolated(failed, "gcd needs nonzero P and Q")
    L = poly_gcd(P, Q)
    if not _root_free(specP, P * Q):
        failed.append(2)
    if P.degree + Q.degree > specP.n + L.degree:
        failed.append(3)
    if failed:
        raise TheoremPreconditionViolated(failed)
    lhs = intersect(grs(specP), grs(specQ))
    rhs = grs(specP.with_poly(L))
    return TheoremCheck(lhs, rhs, lhs == rhs)


def grs_sum_theorem_check(specP: GrsSpec, specQ: GrsSpec) -> TheoremCheck:
    """Compare ``GRS(P) + GRS(Q)`` with ``GRS(lcm(P, Q))``."""
    _shared(specP, specQ)
    M = poly_lcm(specP.P, specQ.P)
    if M.degree > specP.n:
        raise LcmDegreeTooLarge(f"deg lcm = {M.degree} exceeds n = {specP.n}")
    if not _root_free(specP, specP.P * specQ.P):
        raise TheoremPreconditionViolated([2])
    lhs = code_sum(grs(specP), grs(specQ))
    rhs = grs(specP.with_poly(M))
    return TheoremCheck(lhs, rhs, lhs == rhs)


# -- pair construction ------------------------------------------------------------------

def _candidates(F: Field, degree: int, points: Sequence[int], count: int) -> list[Poly]:
    """Up to ``count`` lexicographically first monic irreducibles of ``degree`` with no root in ``points``."""
    if degree == 0:
        return [Poly.one(F)]
    if degree == 1:
        taken = set(points)
        out = [f for f in irreducibles(F, 1) if F.neg(f.coeffs[0]) not in taken]
        return out[:count]
    # irreducibles of degree >= 2 have no roots at all
    return irreducibles(F, degree, limit=count)


def select_factors(F: Field, points: Sequence[int], d_f: int, d_L: int, d_h: int) -> tuple[Poly, Poly, Poly]:
    """``(f, L, h)``: first root-free irreducibles of the given degrees with ``f != h``."""
    fs = _candidates(F, d_f, points, 1)
    Ls = _candidates(F, d_L, points, 1)
    hs = _candidates(F, d_h, points, 2)
    if not fs or not Ls:
        raise NoRootFreeFactor(f"no root-free irreducible of degree {d_f if not fs else d_L} avoids the points")
    f, L = fs[0], Ls[0]
    h = next((g for g in hs if d_h == 0 or g != f), None)
    if h is None:
        raise NoRootFreeFactor(f"need two distinct root-free irreducibles of degree {d_h}")
    return f, L, h


def grs_pair(
    field: Field,
    n: int,
    k1: int,
    k2: int,
    ell: int,
    points: Optional[Sequence[int]] = None,
    multipliers: Optional[Sequence[int]] = None,
    extended: Optional[bool] = None,
) -> IntersectionPair:
    """MDS ``[n, k1]`` and ``[n, k2]`` codes meeting in dimension ``ell``.

    ``P = f L`` and ``Q = h L`` with ``f, L, h`` monic irreducible of degrees
    ``k1 - ell``, ``ell``, ``k2 - ell`` chosen so that ``P Q`` is nonzero on
    the evaluation points.  By default the points are the first ``n`` field
    elements (plain GRS); if a needed linear factor has no free root, the
    extended code on the first ``n - 1`` elements is tried, which frees one
    more field element.  ``n = q + 1`` always uses the extended code.
    """
    q = field.q
    if q < 3:
        raise ParameterOutOfRange("GRS pairs need q >= 3")
    if not (1 <= n <= q + 1 and 0 <= k1 <= n and 0 <= k2 <= n and 0 <= ell <= min(k1, k2)):
        raise ParameterOutOfRange(f"bad parameters n={n}, k1={k1}, k2={k2}, ell={ell} over GF({q})")
    if k1 + k2 > n + ell:
        raise DegreeConditionViolated(f"k1 + k2 = {k1 + k2} exceeds n + ell = {n + ell}")

    if points is not None:
        points = [int(x) for x in points]
        if extended is None:
            extended = len(points) == n - 1
        if len(points) != n - (1 if extended else 0):
            raise ParameterOutOfRange(f"{len(points)} points do not fit length {n}")
        variants = [(extended, points)]
    else:
        if extended is None:
            modes = [False, True] if n <= q else [True]
        else:
            modes = [extended]
        variants = [(ext, list(range(n - 1 if ext else n))) for ext in modes]
        if any(len(pts) > q for _, pts in variants):
            raise ParameterOutOfRange(f"length {n} needs the extended construction over GF({q})")

    err: NoRootFreeFactor | None = None
    for ext, pts in variants:
        try:
            f, L, h = select_factors(field, pts, k1 - ell, ell, k2 - ell)
        except NoRootFreeFactor as e:
            err = e
            continue
        P, Q = f * L, h * L
        if poly_gcd(P, Q) != L:
            raise CertificationError("selected factors do not have gcd L")
        specP = GrsSpec.make(field, P, pts, multipliers, extended=ext)
        specQ = specP.with_poly(Q)
        c1, c2 = grs(specP), grs(specQ)
        pair = IntersectionPair.of(
            c1, c2,
            provenance={
                "construction": "extended-grs" if ext else "grs",
                "points": list(specP.a),
                "multipliers": list(specP.v),
                "P": P.to_json(), "Q": Q.to_json(), "L": L.to_json(),
            },
        )
        if pair.ell != ell or c1.k != k1 or c2.k != k2:
            raise CertificationError(f"construction gave dims ({c1.k}, {c2.k}, {pair.ell})")
        return pair
    assert err is not None
    raise err


def message_codeword(spec: GrsSpec, f: Poly) -> np.ndarray:
    """The codeword of ``spec`` carrying the message polynomial ``f`` (``deg f < deg P``)."""
    F, k = spec.field, spec.k
    if f.degree >= k:
        raise DegreeTooLarge(f"message degree {f.degree} must be below {k}")
    out = [F.mul(v, F.div(f(x), spec.P(x))) for v, x in zip(spec.v, spec.a)]
    if spec.extended:
        top = f.coeffs[k - 1] if len(f.coeffs) >= k else 0
        out.append(F.mul(spec.v[-1], F.div(top, spec.P.lead)))
    return np.asarray(out, dtype=np.int64)


def grs_pair_by_scaling(
    field: Field, n: int, k1: int, k2: int, ell: int, seed: int = 0, tries: int = 20,
    max_messages: int = 200,
) -> IntersectionPair:
    """MDS pair from one GRS code and a column-rescaled second GRS code.

    Covers the cases where :func:`grs_pair` runs out of root-free linear
    factors (typically ``n = q + 1``).  With ``C1 = GRS(P1)`` and base code
    ``B = GRS(P2)``, pick the ``ell`` messages ``m x^j`` (``j < ell``) of C1
    and solve the linear system asking that ``u * c`` lie in ``B`` for each
    such codeword ``c``.  A solution ``u`` with no zero entry gives
    ``C2 = B / u``, which contains them.  Rescaling columns keeps ``B`` MDS.
    ``m`` runs over monic polynomials of growing degree and a few seeded
    random kernel vectors are tried for each (at most ``max_messages`` choices
    of ``m``); the first exact hit wins.
    """
    from .matrix import kernel

    q = field.q
    if q < 3:
        raise ParameterOutOfRange("GRS pairs need q >= 3")
    if not (1 <= n <= q + 1 and 1 <= k1 < n and 1 <= k2 < n and 0 <= ell <= min(k1, k2)):
        raise ParameterOutOfRange(f"bad parameters n={n}, k1={k1}, k2={k2}, ell={ell} over GF({q})")
    if k1 + k2 > n + ell:
        raise DegreeConditionViolated(f"k1 + k2 = {k1 + k2} exceeds n + ell = {n + ell}")
    if k1 > k2:
        # the search is over messages of C1, so let C1 be the smaller code
        swapped = grs_pair_by_scaling(field, n, k2, k1, ell, seed, tries, max_messages)
        return IntersectionPair(swapped.c2, swapped.c1, ell, provenance={**swapped.provenance, "swapped": True})
    ext = n == q + 1
    pts = range(n - 1 if ext else n)
    s1, s2 = _base_spec(field, k1, pts, ext), _base_spec(field, k2, pts, ext)
    C1 = grs(s1) if s1 else mds_code(field, n, k1)
    B = grs(s2) if s2 else mds_code(field, n, k2)
    H = B.parity.data
    rng = np.random.default_rng(seed)
    budget = max_messages
    for deg in range(0, k1 - ell + 1):
        for m in monic_polys(field, deg):
            budget -= 1
            if budget < 0:
                break
            words = [_word(s1, m * Poly.monomial(field, j), n) for j in range(ell)]
            if words:
                K = kernel(Matrix(field, np.vstack([field.vmul(H, w[None, :]) for w in words])))
            else:
                K = Matrix.identity(field, n)
            if K.rows == 0:
                continue
            for trial in range(tries):
                coeffs = rng.integers(0, q, size=K.rows)
                u = np.zeros(n, dtype=np.int64)
                for c, row in zip(coeffs.tolist(), K.data):
                    u = field.vadd(u, field.vmul(c, row))
                if (u == 0).any():
                    continue
                w = field.vinv(u)
                C2 = LinearCode(Matrix(field, field.vmul(B.gen.data, w[None, :])), name=f"scaled-{B.name}")
                if intersect(C1, C2).k == ell:
                    return IntersectionPair(C1, C2, ell, provenance={
                        "construction": "scaled-grs", "m": m.to_json(), "trial": trial, "seed": seed,
                        "C1": C1.name, "base": B.name, "scaling": w.tolist(),
                    })
    raise NotFoundWithinBudget(f"no rescaling found for n={n}, k1={k1}, k2={k2}, ell={ell}")


def _base_spec(field: Field, k: int, pts, ext: bool) -> GrsSpec | None:
    """GrsSpec with the first root-free denominator of degree ``k``; ``None`` when ``k = 1`` has none."""
    fs = _candidates(field, k, list(pts), 1)
    return GrsSpec.make(field, fs[0], pts, extended=ext) if fs else None


def _word(spec: GrsSpec | None, f: Poly, n: int) -> np.ndarray:
    if spec is None:  # the all-ones repetition code
        return np.full(n, f.coeffs[0] if f.coeffs else 0, dtype=np.int64)
    return message_codeword(spec, f)


# -- stock MDS codes --------------------------------------------------------------------

def mds_code(field: Field, n: int, k: int) -> LinearCode:
    """A fixed MDS ``[n, k]`` code for ``n <= q + 1``.

    Zero, repetition and full codes at the edges; otherwise a (possibly
    extended) GRS code whose denominator is the first irreducible of degree ``k``.
    """
    q = field.q
    if not (1 <= n <= q + 1 and 0 <= k <= n):
        raise ParameterOutOfRange(f"no MDS [{n},{k}] construction over GF({q}) here")
    if k == 0:
        return LinearCode.zero(field, n)
    if k == n:
        return LinearCode.full(field, n)
    if k == 1:
        return LinearCode(Matrix(field, np.ones((1, n), dtype=np.int64)), name=f"repetition-{n}")
    ext = n == q + 1
    P = irreducibles(field, k, limit=1)[0]
    return grs(GrsSpec.make(field, P, range(n - 1 if ext else n), extended=ext))


def superregular_from_mds(field: Field, n: int) -> Matrix:
    """The ``n x n`` tail ``A`` of the systematic generator ``[I | A]`` of an MDS ``[2n, n]`` code."""
    if 2 * n > field.q + 1:
        raise ParameterOutOfRange(f"need 2n <= q + 1, got n={n}, q={field.q}")
    C = mds_code(field, 2 * n, n)
    return C.gen.submatrix(range(n), range(n, 2 * n))
