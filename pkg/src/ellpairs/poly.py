"""Dense univariate polynomials over a :class:`~ellpairs.gf.Field`.

Coefficients are stored lowest degree first with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Iterator

from .errors import (
    BothZero,
    DegreeZeroInput,
    DivisionByZeroPoly,
    FieldMismatch,
    NonPositiveDegree,
    ZeroInput,
)
from .gf import Field, prime_factors

NEG_INF = -math.inf


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = [field.check(int(x)) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls(field, (1,))

    @classmethod
    def const(cls, field: Field, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def x(cls, field: Field) -> Poly:
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> Poly:
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[int]) -> Poly:
        """The monic polynomial prod(x - r)."""
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    # -- basic queries -----------------------------------------------------------
    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def scale(self, c: int) -> Poly:
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    # -- ring operations -------------------------------------------------------------
    def _same(self, other: Poly) -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return Poly(F, out)

    def __neg__(self) -> Poly:
        F = self.field
        return Poly(F, [F.neg(a) for a in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same(other)
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        inv_lead = F.inv(other.lead)
        quot = [0] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            shift = len(rem) - 1 - dg
            c = F.mul(rem[-1], inv_lead)
            quot[shift] = c
            for i, g in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, g))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def derivative(self) -> Poly:
        F = self.field
        return Poly(F, [F.mul(i % F.p, c) for i, c in enumerate(self.coeffs)][1:])


def poly_from_json(field: Field, obj: list[int]) -> Poly:
    return Poly(field, obj)


def poly_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    return divmod(f, g)


def poly_eval(f: Poly, a: int) -> int:
    """Horner evaluation of ``f`` at the field element ``a``."""
    F = f.field
    F.check(a)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._same(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        raise ZeroInput("lcm needs two nonzero polynomials")
    return ((f * g) // poly_gcd(f, g)).monic()


def powmod(base: Poly, k: int, mod: Poly) -> Poly:
    acc = Poly.one(base.field) % mod
    base = base % mod
    while k:
        if k & 1:
            acc = (acc * base) % mod
        base = (base * base) % mod
        k >>= 1
    return acc


def is_irreducible(f: Poly) -> bool:
    """Rabin's irreducibility test.

    ``f`` of degree ``d`` is irreducible iff ``x^(q^d) = x (mod f)`` and
    ``gcd(x^(q^(d/r)) - x, f) = 1`` for every prime ``r | d``.
    """
    d = f.degree
    if d < 1:
        raise DegreeZeroInput("irreducibility is defined for degree >= 1")
    if d == 1:
        return True
    F = f.field
    f = f.monic()
    x = Poly.x(F)
    # frob[i] = x^(q^i) mod f
    frob = [x % f]
    for _ in range(d):
        frob.append(powmod(frob[-1], F.q, f))
    if frob[d] != x % f:
        return False
    for r in prime_factors(d):
        if poly_gcd(frob[d // r] - x, f).degree != 0:
            return False
    return True


def monic_polys(field: Field, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree, lexicographic from the constant term."""
    for tail in itertools.product(range(field.q), repeat=degree):
        yield Poly(field, tail + (1,))


@functools.lru_cache(maxsize=4096)
def _irreducibles(field: Field, degree: int, limit: int | None) -> tuple[Poly, ...]:
    if degree == 0:
        return (Poly.one(field),)
    if degree == 1:
        return tuple(monic_polys(field, 1))
    q = field.q
    # For degree >= 2 the constant term must be nonzero; skipping that block
    # up front keeps the lexicographic order (constant term most significant).
    screen = list(field.elements()) if q <= 256 else []
    out = []
    for c0, *rest in itertools.product(range(1, q), *[range(q)] * (degree - 1)):
        if limit is not None and len(out) >= limit:
            break
        f = Poly(field, [c0, *rest, 1])
        if any(poly_eval(f, a) == 0 for a in screen):
            continue
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


def irreducibles(field: Field, degree: int, limit: int | None = None) -> list[Poly]:
    """Monic irreducibles of exactly ``degree`` in lexicographic order, at most ``limit`` of them."""
    if degree < 0:
        raise NonPositiveDegree(f"degree must be >= 0, got {degree}")
    return list(_irreducibles(field, degree, limit))


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("Möbius function is defined on positive integers")
    out = 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            m //= f
            if m % f == 0:
                return 0
            out = -out
        f += 1
    if m > 1:
        out = -out
    return out


def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree ``n`` over GF(q)."""
    if n < 1:
        raise NonPositiveDegree(f"degree must be >= 1, got {n}")
    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n
