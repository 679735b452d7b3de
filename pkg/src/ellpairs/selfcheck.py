"""Invariant suites run by ``ellpairs selfcheck``.

Each suite checks one family of identities against an independent route
(brute force, a second formula, or a recomputation from scratch) and
returns a :class:`SuiteResult`.  Exceptions inside a suite count as
failures, so a broken field makes the run fail rather than crash.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .catalog import random_code
from .code import intersect, min_distance
from .eaqecc import mds_eaqecc
from .errors import NoRootFreeFactor
from .example import reproduce_example
from .gf import Field, field_of_order
from .grs import GrsSpec, grs, grs_intersection_theorem_check, grs_pair, grs_sum_theorem_check
from .matrix import cauchy, is_super_regular, vandermonde_superregular
from .pairs import IntersectionPair, ell_by_rank, extend_length, pair_from_superregular, reduce_ell
from .poly import count_irreducibles, irreducibles, is_irreducible, monic_polys, poly_gcd, poly_lcm


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0


class _Tally:
    def __init__(self):
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what)
        elif not ok:
            self.failures.append("...")


def _field_axioms(F: Field, t: _Tally, rng: random.Random) -> None:
    q = F.q
    elems = range(q) if q <= 16 else [rng.randrange(q) for _ in range(16)]
    for a in elems:
        for b in elems:
            t.check(F.mul(a, b) != 0 or a == 0 or b == 0, f"{F!r}: zero divisor {a}*{b}")
            t.check(F.add(a, b) == F.add(b, a), f"{F!r}: add not commutative at {a},{b}")
            c = rng.randrange(q)
            t.check(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)), f"{F!r}: distributivity")
        if a:
            try:
                t.check(F.mul(a, F.inv(a)) == 1, f"{F!r}: bad inverse of {a}")
            except ZeroDivisionError:
                t.check(False, f"{F!r}: {a} has no inverse")


def suite_fields(fields: list[Field], rng: random.Random) -> _Tally:
    t = _Tally()
    for F in fields:
        _field_axioms(F, t, rng)
    return t


def suite_irreducible_counts(qs, nmax: int) -> _Tally:
    t = _Tally()
    for q in qs:
        F = field_of_order(q)
        for n in range(1, nmax + 1):
            brute = sum(1 for f in monic_polys(F, n) if is_irreducible(f))
            t.check(brute == count_irreducibles(q, n), f"N_{q}({n}) mismatch")
            t.check(len(irreducibles(F, n)) == brute, f"irreducibles({q},{n}) count")
    return t


def suite_rank_characterisation(fields: list[Field], trials: int, rng: random.Random) -> _Tally:
    t = _Tally()
    for _ in range(trials):
        F = rng.choice(fields)
        n = rng.randint(1, 8)
        k1, k2 = rng.randint(0, n), rng.randint(0, n)
        C1, C2 = random_code(F, n, k1, rng), random_code(F, n, k2, rng)
        ell = intersect(C1, C2).k
        t.check(ell_by_rank(C1, C2) == ell, f"rank route vs intersection on {C1!r}, {C2!r}")
    return t


def suite_grs_mds(qs, max_size: int) -> _Tally:
    t = _Tally()
    for q in qs:
        F = field_of_order(q)
        for n in range(1, q + 2):
            ext = n == q + 1
            pts = range(n - 1 if ext else n)
            for k in range(1, n + 1):
                if q**k > max_size:
                    break
                cands = [P for P in irreducibles(F, k, limit=1)] if k > 1 else [
                    f for f in irreducibles(F, 1) if all(f(x) for x in pts)][:1]
                for P in cands:
                    C = grs(GrsSpec.make(F, P, pts, extended=ext))
                    t.check(C.k == k and min_distance(C, "direct") == n - k + 1, f"GRS[{n},{k}]_{q} not MDS")
    return t


def theorem_grid(q: int, max_deg: int = 4, per_degree: int = 3):
    """Pairs of GrsSpec objects for the gcd / lcm theorems over GF(q).

    Lengths ``q - 2`` and ``q`` (plain) and ``q + 1`` (extended) on the
    first field elements.  For each, the pool holds the first ``per_degree``
    monic irreducibles of every degree ``1..max_deg`` with no root among the
    points; P and Q run over all products of pool members of total degree
    at most ``max_deg``.  Yields ``(specP, specQ)`` for every unordered pair.
    """
    F = field_of_order(q)
    for n, ext in ((q - 2, False), (q, False), (q + 1, True)):
        pts = list(range(n - 1 if ext else n))
        pool = []
        for d in range(1, max_deg + 1):
            cands = irreducibles(F, d) if d == 1 else irreducibles(F, d, limit=per_degree)
            pool += [f for f in cands if all(f(x) for x in pts)][:per_degree]
        products = {}
        for r in range(1, max_deg + 1):
            for combo in itertools.combinations_with_replacement(pool, r):
                if sum(int(f.degree) for f in combo) > min(max_deg, n):
                    continue
                P = combo[0]
                for g in combo[1:]:
                    P = P * g
                products[P.coeffs] = P
        polys = sorted(products.values(), key=lambda f: (f.degree, f.coeffs))
        for P, Q in itertools.combinations_with_replacement(polys, 2):
            sP = GrsSpec.make(F, P, pts, extended=ext)
            yield sP, sP.with_poly(Q)


def suite_grs_theorems(qs, max_deg: int) -> _Tally:
    t = _Tally()
    for q in qs:
        for sP, sQ in theorem_grid(q, max_deg):
            P, Q = sP.P, sQ.P
            if P.degree + Q.degree <= sP.n + poly_gcd(P, Q).degree:
                t.check(grs_intersection_theorem_check(sP, sQ).equal, f"gcd theorem {P} / {Q}, n={sP.n}")
            if poly_lcm(P, Q).degree <= sP.n:
                t.check(grs_sum_theorem_check(sP, sQ).equal, f"lcm theorem {P} / {Q}, n={sP.n}")
    return t


def suite_grs_pairs(qs) -> _Tally:
    t = _Tally()
    for q in qs:
        F = field_of_order(q)
        for n in range(1, q + 2):
            for k1 in range(n + 1):
                for k2 in range(n + 1):
                    for ell in range(max(0, k1 + k2 - n), min(k1, k2) + 1):
                        try:
                            pair = grs_pair(F, n, k1, k2, ell)
                        except NoRootFreeFactor:
                            continue
                        t.check(pair.ell == ell and intersect(pair.c1, pair.c2).k == ell,
                                f"grs_pair({q},{n},{k1},{k2},{ell})")
    return t


def suite_superregular(qs, nmax: int) -> _Tally:
    t = _Tally()
    for q in qs:
        F = field_of_order(q)
        for n in range(1, nmax + 1):
            x = list(range(n))
            y = [c for c in F.elements() if c not in x and F.neg(c) not in x][:n]
            if len(y) == n:
                A = cauchy(F, x, y)
                t.check(is_super_regular(A), f"Cauchy {n}x{n} over GF({q})")
                V = vandermonde_superregular(F, x, y)
                t.check(is_super_regular(V), f"Vandermonde-derived {n}x{n} over GF({q})")
                for i in range(n + 1):
                    for j in range(n - i + 1):
                        for ell in range(i + 1):
                            p = pair_from_superregular(A, i, j, ell, verify=False)
                            ok = p.c1.k == i and p.c2.k == j + ell and p.ell == ell
                            for C in (p.c1, p.c2):
                                if 0 < C.k:
                                    ok &= min_distance(C) == n - C.k + 1
                            t.check(ok, f"super-regular pair n={n}, i={i}, j={j}, ell={ell}")
    return t


def suite_propagation(fields: list[Field], trials: int, rng: random.Random) -> _Tally:
    t = _Tally()
    for _ in range(trials):
        F = rng.choice(fields)
        n = rng.randint(2, 7)
        k1, k2 = rng.randint(1, n), rng.randint(1, n)
        pair = IntersectionPair.of(random_code(F, n, k1, rng), random_code(F, n, k2, rng))
        if pair.ell == 0:
            continue
        gamma = rng.randint(0, pair.ell)
        d2 = min_distance(pair.c2)
        r = reduce_ell(pair, gamma)
        ok = r.n == n and r.c1 == pair.c1 and r.c2.k == k2 - pair.ell + gamma and r.ell == gamma
        ok &= r.c2.k == 0 or min_distance(r.c2) >= d2
        t.check(ok, f"reduce_ell gamma={gamma} on [{n},{k1}],[{n},{k2}]")
        e = extend_length(pair, gamma)
        ok = e.n == n + pair.ell - gamma and e.c1.k == k1 and e.c2.k == k2 and e.ell == gamma
        ok &= min_distance(e.c1) == min_distance(pair.c1) and min_distance(e.c2) >= d2
        t.check(ok, f"extend_length gamma={gamma} on [{n},{k1}],[{n},{k2}]")
    return t


def suite_mds_eaqecc(qs) -> _Tally:
    t = _Tally()
    for q in qs:
        F = field_of_order(q)
        for n in range(1, q + 2):
            for k in range(n + 1):
                for ell in range(min(k, n - k) + 1):
                    try:
                        p, _ = mds_eaqecc(F, n, k, ell)
                        ok = (p.k, p.d, p.c, p.singleton_slack) == (n - k - ell, k + 1, k - ell, 0)
                    except Exception:  # reported as a failed check
                        ok = False
                    t.check(ok, f"MDS EAQECC q={q} n={n} k={k} ell={ell}")
    return t


def suite_example() -> _Tally:
    t = _Tally()
    for row in reproduce_example():
        t.check(row.ok, f"example {row.label}: expected {row.expected}, got {row.by_rank}/{row.by_intersection}")
    return t


def tampered_field() -> Field:
    """GF(4) built on the reducible modulus x^2 + 1 = (x + 1)^2."""
    return Field(2, 2, modulus=(1, 0, 1))


def run_selfcheck(profile: str = "quick", seed: int = 0, tamper: bool = False) -> dict:
    if profile not in ("quick", "full"):
        raise ValueError("profile must be 'quick' or 'full'")
    full = profile == "full"
    rng = random.Random(seed)
    small = [field_of_order(q) for q in (2, 3, 4)]
    if tamper:
        small[2] = tampered_field()
    suites: list[tuple[str, Callable[[], _Tally]]] = [
        ("fields", lambda: suite_fields(small + [field_of_order(q) for q in (5, 8, 9)], rng)),
        ("irreducible-counts", lambda: suite_irreducible_counts((2, 3, 4, 5, 7, 8, 9) if full else (2, 3, 4), 4 if full else 3)),
        ("rank-characterisation", lambda: suite_rank_characterisation(small, 500 if full else 100, rng)),
        ("grs-mds", lambda: suite_grs_mds((3, 4, 5, 7, 8, 9) if full else (3, 4, 5), 1 << 18 if full else 1 << 12)),
        ("grs-theorems", lambda: suite_grs_theorems((5, 7) if full else (5,), 4)),
        ("grs-pairs", lambda: suite_grs_pairs((3, 4, 5, 7) if full else (3, 4))),
        ("super-regular", lambda: suite_superregular((7, 9, 11) if full else (7,), 4 if full else 3)),
        ("propagation", lambda: suite_propagation(small[:2], 200 if full else 40, rng)),
        ("mds-eaqecc", lambda: suite_mds_eaqecc((3, 4, 5, 7, 8, 9) if full else (3, 4, 5))),
        ("example", suite_example),
    ]
    results = []
    for name, fn in suites:
        start = time.perf_counter()
        try:
            tally = fn()
            res = SuiteResult(name, not tally.failures, tally.checked, tally.failures)
        except Exception as e:
            res = SuiteResult(name, False, 0, [f"{type(e).__name__}: {e}"])
        res.seconds = round(time.perf_counter() - start, 3)
        results.append(res)
    return {
        "profile": profile,
        "seed": seed,
        "tamper": tamper,
        "passed": all(r.passed for r in results),
        "suites": [asdict(r) for r in results],
    }
