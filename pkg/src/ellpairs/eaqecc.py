"""Entanglement-assisted quantum code parameters from pairs of classical codes.

Two classical codes with parity checks ``H1, H2`` give an EAQECC
``[[n, k1 + k2 - n + c, min(d1, d2); c]]`` with ``c = rank(H1 H2^t)``.
Taking ``D1 = C1^⊥`` and ``D2 = C2`` for an l-intersection pair turns this
into ``[[n, k2 - l, min(d(C1^⊥), d(C2)); k1 - l]]``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .catalog import CodeCatalog
from .code import ENUMERATION_LIMIT, LinearCode, intersect, is_mds_by_columns
from .errors import (
    CertificationError,
    DimensionMismatch,
    DistanceTooExpensive,
    FieldMismatch,
    NoRootFreeFactor,
    NotFoundWithinBudget,
    ParameterOutOfRange,
    TooLargeToEnumerate,
)
from .gf import Field
from .matrix import Matrix
from .pairs import IntersectionPair, tune_by_monomial


@dataclass(frozen=True)
class EaqeccParams:
    """``[[n, k, d; c]]_q``.

    ``d`` is ``None`` when it could not be computed within the enumeration
    budget.  ``degenerate`` marks boundary points (no logical qubits, or a
    distance that is vacuous because a code is zero).
    """

    n: int
    k: int
    d: Optional[int]
    c: int
    q: int
    degenerate: bool = False

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k - self.c, self.n)

    @property
    def singleton_slack(self) -> Optional[int]:
        if self.d is None:
            return None
        return self.n + self.c - self.k - 2 * (self.d - 1)

    @property
    def mds(self) -> bool:
        return self.singleton_slack == 0

    @property
    def valid(self) -> bool:
        """The certification gate: ``0 <= c <= n - 1`` and nonnegative Singleton slack."""
        if not 0 <= self.c <= self.n - 1:
            return False
        return self.singleton_slack is None or self.singleton_slack >= 0

    def certify(self) -> EaqeccParams:
        if not self.degenerate and not self.valid:
            raise CertificationError(f"{self} violates c <= n-1 or the Singleton bound")
        return self

    def __str__(self) -> str:
        d = "?" if self.d is None else self.d
        return f"[[{self.n},{self.k},{d};{self.c}]]_{self.q}"

    def to_json(self) -> dict:
        out = asdict(self)
        out.update(rate=str(self.rate), net_rate=str(self.net_rate),
                   singleton_slack=self.singleton_slack, mds=self.mds, valid=self.valid)
        return out


def eaqecc_from_parity(H1: Matrix, H2: Matrix, d1: int, d2: int) -> EaqeccParams:
    """Parameters from full-rank parity checks of ``[n, k1, d1]`` and ``[n, k2, d2]`` codes."""
    if H1.field != H2.field:
        raise FieldMismatch(f"{H1.field!r} vs {H2.field!r}")
    if H1.cols != H2.cols:
        raise DimensionMismatch(f"parity checks have {H1.cols} and {H2.cols} columns")
    n = H1.cols
    r1, r2 = H1.rank(), H2.rank()
    if r1 != H1.rows or r2 != H2.rows:
        raise DimensionMismatch("parity-check matrices must have full row rank")
    c = (H1 @ H2.T).rank() if H1.rows and H2.rows else 0
    k = (n - r1) + (n - r2) - n + c
    return EaqeccParams(n, k, min(d1, d2), c, H1.field.q)


def _distance(C: LinearCode, limit: int) -> tuple[int, bool]:
    """Minimum distance, with the zero code counted as ``n + 1`` (vacuous)."""
    if C.k == 0:
        return C.n + 1, True
    try:
        return C.min_distance(limit=limit), False
    except TooLargeToEnumerate as e:
        raise DistanceTooExpensive(str(e)) from e


def eaqecc_from_pair(
    pair: IntersectionPair,
    limit: int = ENUMERATION_LIMIT,
    distances: Optional[tuple[int, int]] = None,
) -> EaqeccParams:
    """``[[n, k2 - l, min(d(C1^⊥), d(C2)); k1 - l]]`` for an l-intersection pair.

    ``distances`` may supply ``(d(C1^⊥), d(C2))`` when they are known by
    construction; otherwise both are enumerated.  The result is cross-checked
    against :func:`eaqecc_from_parity` and gated on ``c <= n - 1`` and the
    Singleton bound unless degenerate.
    """
    C1, C2 = pair.c1, pair.c2
    n, q = pair.n, pair.field.q
    D1 = C1.dual()
    vacuous = D1.k == 0 or C2.k == 0
    if distances is None:
        d1, _ = _distance(D1, limit)
        d2, _ = _distance(C2, limit)
    else:
        d1, d2 = distances
    k, c = C2.k - pair.ell, C1.k - pair.ell
    # cross-check via parity checks of D1 = C1^⊥ and D2 = C2
    if D1.k and C2.k:
        via = eaqecc_from_parity(D1.parity, C2.parity, d1, d2)
        if (via.k, via.c) != (k, c):
            raise CertificationError(f"parity route gave k={via.k}, c={via.c}; pair route k={k}, c={c}")
    params = EaqeccParams(n, k, min(d1, d2), c, q, degenerate=vacuous or k == 0)
    return params.certify()


def _check_mds_args(field: Field, n: int, k: int, ell: int) -> None:
    q = field.q
    if q < 3:
        raise ParameterOutOfRange("MDS EAQECC families need q >= 3")
    if not (1 <= n <= q + 1 and 0 <= k <= n and 0 <= ell <= min(k, n - k)):
        raise ParameterOutOfRange(f"bad parameters n={n}, k={k}, ell={ell} over GF({q})")


def mds_pair(field: Field, n: int, k: int, ell: int, seed: int = 0) -> IntersectionPair:
    """MDS ``[n, k]`` and ``[n, n - k]`` codes meeting in dimension ``ell``.

    Uses the GRS gcd construction.  Where that runs out of root-free linear
    factors (mostly at ``n = q + 1``) it falls back to rescaling the columns
    of the second GRS code, then to monomial tuning of two fixed MDS codes.
    Both fallbacks keep the codes MDS.
    """
    from .grs import grs_pair, grs_pair_by_scaling, mds_code

    _check_mds_args(field, n, k, ell)
    try:
        return grs_pair(field, n, k, n - k, ell)
    except NoRootFreeFactor:
        pass
    try:
        return grs_pair_by_scaling(field, n, k, n - k, ell, seed=seed)
    except NotFoundWithinBudget:
        pass
    _, pair = tune_by_monomial(mds_code(field, n, k), mds_code(field, n, n - k), ell, budget=2000, seed=seed)
    pair.provenance["construction"] = "monomial-mds"
    return pair


def mds_eaqecc(
    field: Field,
    n: int,
    k: int,
    ell: int,
    verify_distance: bool = True,
    limit: int = 1 << 18,
) -> tuple[EaqeccParams, IntersectionPair]:
    """``[[n, n - k - l, k + 1; k - l]]_q`` from an MDS pair, certified with zero Singleton slack.

    With ``verify_distance`` both distances are enumerated when the message
    space is at most ``limit``; otherwise MDS-ness of both codes is checked
    column-wise and the distances follow from it.
    """
    pair = mds_pair(field, n, k, ell)
    D1, C2 = pair.c1.dual(), pair.c2
    dist = []
    for C in (D1, C2):
        if C.k == 0:
            dist.append(n + 1)
        elif verify_distance and min(field.q**C.k, field.q ** (n - C.k)) <= limit:
            dist.append(C.min_distance(limit=limit))
        else:
            if not is_mds_by_columns(C):
                raise CertificationError(f"{C!r} is not MDS")
            dist.append(n - C.k + 1)
    params = eaqecc_from_pair(pair, distances=(dist[0], dist[1]))
    expected = (n, n - k - ell, k + 1, k - ell)
    if (params.n, params.k, params.d, params.c) != expected or params.singleton_slack != 0:
        raise CertificationError(f"got {params}, expected [[{n},{n - k - ell},{k + 1};{k - ell}]]")
    return params, pair


MDS_GRID_COLUMNS = ["q", "n", "k", "ell", "kk", "d", "c", "rate", "net_rate", "slack", "degenerate"]


def mds_grid(field: Field, nmax: Optional[int] = None, verify_distance: bool = True) -> list[dict]:
    """Rows for every ``1 <= n <= min(nmax, q + 1)``, ``0 <= k <= n``, ``0 <= l <= min(k, n - k)``."""
    top = field.q + 1 if nmax is None else min(nmax, field.q + 1)
    rows = []
    for n in range(1, top + 1):
        for k in range(n + 1):
            for ell in range(min(k, n - k) + 1):
                p, _ = mds_eaqecc(field, n, k, ell, verify_distance=verify_distance)
                rows.append({
                    "q": field.q, "n": n, "k": k, "ell": ell, "kk": p.k, "d": p.d, "c": p.c,
                    "rate": str(p.rate), "net_rate": str(p.net_rate),
                    "slack": p.singleton_slack, "degenerate": p.degenerate,
                })
    return rows


@dataclass(frozen=True)
class CatalogEntry:
    """One tuple of the positive-net-rate search."""

    params: EaqeccParams
    r: int
    k1: int
    k2: int
    ell: int
    d1_perp: Optional[int]
    d2: Optional[int]
    c1_name: Optional[str] = None
    c2_name: Optional[str] = None

    @property
    def rate_at_least_half(self) -> bool:
        # tagged from the dimension criterion, which implies (k2 - l) / n >= 1/2
        return 2 * self.ell <= self.params.n - 2 * self.r

    def to_row(self) -> dict:
        p = self.params
        return {
            "q": p.q, "n": p.n, "r": self.r, "k1": self.k1, "k2": self.k2, "ell": self.ell,
            "k": p.k, "d": "unavailable" if p.d is None else p.d, "c": p.c,
            "rate": str(p.rate), "net_rate": str(p.net_rate),
            "rate_ge_half": self.rate_at_least_half, "degenerate": p.degenerate,
            "c1": self.c1_name or "", "c2": self.c2_name or "",
        }


CATALOG_COLUMNS = ["q", "n", "r", "k1", "k2", "ell", "k", "d", "c", "rate", "net_rate",
                   "rate_ge_half", "degenerate", "c1", "c2"]


def _maybe_distance(C: LinearCode, limit: int) -> Optional[int]:
    try:
        return _distance(C, limit)[0]
    except DistanceTooExpensive:
        return None


def catalog_search(
    field: Field,
    n_range: Iterable[int],
    r: Optional[int] = None,
    codes: Optional[CodeCatalog] = None,
    on_miss: str = "skip",
    limit: int = ENUMERATION_LIMIT,
) -> list[CatalogEntry]:
    """Positive-net-rate EAQECCs from catalog codes.

    For each ``n`` and each ``r < n/2`` (or the given ``r``), and every
    ``r <= k1 < n - r <= k2 <= n``: ``C2`` is the catalog's best
    ``[n, k2]`` code and ``C1`` the dual of its best ``[n, n - k1]`` code.
    ``on_miss="raise"`` propagates :class:`CatalogMiss`; the default skips
    the cell.  Entries come out in grid order.
    """
    from .errors import CatalogMiss

    if on_miss not in ("skip", "raise"):
        raise ValueError("on_miss must be 'skip' or 'raise'")
    codes = codes if codes is not None else CodeCatalog(field)
    out = []
    for n in n_range:
        rs = range(1, (n + 1) // 2) if r is None else [r]
        for rr in rs:
            if not 2 * rr < n:
                raise ParameterOutOfRange(f"need r < n/2, got r={rr}, n={n}")
            for k2 in range(n - rr, n + 1):
                for k1 in range(rr, n - rr):
                    try:
                        C2 = codes.best(n, k2)
                        D = codes.best(n, n - k1)
                    except CatalogMiss:
                        if on_miss == "raise":
                            raise
                        continue
                    C1 = D.dual()
                    ell = intersect(C1, C2).k
                    pair = IntersectionPair(C1, C2, ell)
                    d1 = _maybe_distance(D, limit)
                    d2 = _maybe_distance(C2, limit)
                    if d1 is not None and d2 is not None:
                        params = eaqecc_from_pair(pair, distances=(d1, d2))
                    else:
                        params = EaqeccParams(n, k2 - ell, None, k1 - ell, field.q,
                                              degenerate=k2 == ell)
                    if params.net_rate <= 0:
                        continue
                    out.append(CatalogEntry(params, rr, k1, k2, ell, d1, d2, D.name, C2.name))
    return out


def params_from_row(row: dict) -> EaqeccParams:
    """Rebuild and certify parameters from an ``mds_grid`` or catalog CSV row (all values may be strings)."""

    def flag(v) -> bool:
        return v if isinstance(v, bool) else str(v).strip().lower() == "true"

    kk = int(row["kk"]) if "kk" in row else int(row["k"])
    d = row.get("d")
    d = None if d in (None, "", "unavailable") else int(d)
    p = EaqeccParams(int(row["n"]), kk, d, int(row["c"]), int(row["q"]), degenerate=flag(row.get("degenerate", False)))
    p.certify()
    if "slack" in row and row["slack"] not in ("", None) and int(row["slack"]) != p.singleton_slack:
        raise CertificationError(f"row slack {row['slack']} disagrees with {p}")
    if "net_rate" in row and Fraction(str(row["net_rate"])) != p.net_rate:
        raise CertificationError(f"row net rate {row['net_rate']} disagrees with {p}")
    if "kk" in row:
        n, k, ell = int(row["n"]), int(row["k"]), int(row["ell"])
        if (p.k, p.d, p.c) != (n - k - ell, k + 1, k - ell) or p.singleton_slack != 0:
            raise CertificationError(f"{p} is not the MDS parameter set for n={n}, k={k}, l={ell}")
    return p
