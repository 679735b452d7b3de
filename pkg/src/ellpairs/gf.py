"""Exact arithmetic in GF(p^e).

Elements are plain Python integers in ``range(q)``.  An element encodes the
coefficient vector ``(c_0, ..., c_{e-1})`` of its residue class modulo the
field's defining polynomial in base ``p``::

    value = c_0 + c_1 * p + ... + c_{e-1} * p**(e-1)

so in GF(4) (modulus x^2 + x + 1) the element ``2`` is ``x`` and ``3`` is
``x + 1``.  The defining polynomial is the lexicographically smallest monic
irreducible of degree ``e`` (coefficient tuples compared from the constant
term upwards), which makes every encoding reproducible.

Scalar methods (``add``, ``mul``, ...) work on ints; the ``v*`` methods work
elementwise on integer numpy arrays and broadcast like numpy operators.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from .errors import (
    DivisionByZero,
    InvalidExponentIndex,
    NonPrimeCharacteristic,
    NotInField,
    UnsupportedSize,
)

MAX_ORDER = 1 << 16
# Full q x q lookup tables are built up to this order.
_TABLE_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raise ``UnsupportedSize`` if ``q`` is not a prime power."""
    if q < 2:
        raise UnsupportedSize(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise UnsupportedSize(f"{q} is not a prime power")
    p, e = ps[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# -- plain coefficient-list helpers over GF(p), lowest degree first -----------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _has_factor_mod_p(m: tuple[int, ...], p: int) -> bool:
    """Trial division of monic ``m`` by every monic polynomial of degree <= deg/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _pmod(list(m), list(tail) + [1], p):
                return True
    return False


def canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e`` over GF(p).

    Returned as a coefficient tuple, constant term first, including the
    leading 1.  For ``e == 1`` this is ``x`` itself.
    """
    for tail in itertools.product(range(p), repeat=e):
        m = tuple(tail) + (1,)
        if e == 1 or (m[0] != 0 and not _has_factor_mod_p(m, p)):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """The finite field GF(p^e).

    Prefer :func:`GF` (cached) over calling the constructor.  Passing an
    explicit ``modulus`` bypasses the irreducibility check; this exists only
    so negative controls can build a deliberately broken "field".
    """

    def __init__(self, p: int, e: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if e < 1:
            raise UnsupportedSize(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_ORDER:
            raise UnsupportedSize(f"field order {p}^{e} exceeds {MAX_ORDER}")
        if modulus is None:
            modulus = canonical_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {e}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._exp = None
        self._log = None
        self._build_tables()

    # -- construction --------------------------------------------------------
    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _encode(self, coeffs: list[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _pmul(_trim(self._digits(a)), _trim(self._digits(b)), self.p)
        return self._encode(_pmod(prod, list(self.modulus), self.p))

    def _find_generator(self) -> int | None:
        q, order = self.q, self.q - 1
        if order == 1:
            return 1
        factors = prime_factors(order)
        for g in range(2, q):
            # g^(order/r) != 1 for every prime r | order  <=>  g has full order
            ok = True
            for r in factors:
                acc, base, k = 1, g, order // r
                while k:
                    if k & 1:
                        acc = self._mul_slow(acc, base)
                    base = self._mul_slow(base, base)
                    k >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok:
                return g
        return None

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        self._tables = False
        if self.e > 1:
            g = self._find_generator()
            if g is not None:
                exp = np.zeros(2 * q, dtype=np.int64)
                log = np.zeros(q, dtype=np.int64)
                v = 1
                for i in range(q - 1):
                    exp[i] = v
                    log[v] = i
                    v = self._mul_slow(v, g)
                exp[q - 1 : 2 * (q - 1)] = exp[: q - 1]
                if len(set(exp[: q - 1].tolist())) == q - 1:
                    self._exp, self._log = exp, log
        if q > _TABLE_ORDER:
            if self.e > 1 and self._exp is None:
                raise UnsupportedSize("non-irreducible modulus only allowed for small fields")
            return
        idx = np.arange(q, dtype=np.int64)
        if self.e == 1:
            add = (idx[:, None] + idx[None, :]) % p
            mul = (idx[:, None] * idx[None, :]) % p
        else:
            add = np.zeros((q, q), dtype=np.int64)
            pw = 1
            for _ in range(self.e):
                da = (idx // pw) % p
                add += ((da[:, None] + da[None, :]) % p) * pw
                pw *= p
            if self._exp is not None:
                mul = self._exp[(self._log[:, None] + self._log[None, :]) % (q - 1)]
                mul[0, :] = 0
                mul[:, 0] = 0
            else:
                mul = np.array(
                    [[self._mul_slow(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
                )
        neg = np.argmin(add, axis=1).astype(np.int64)  # add[a, neg[a]] == 0
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            inv[a] = hits[0] if hits.size else 0  # 0 marks "no inverse" (broken modulus)
        self._add_t, self._mul_t, self._neg_t, self._inv_t = add, mul, neg, inv
        # plain-list copies: scalar indexing into numpy arrays is slow
        self._add_l, self._mul_l = add.tolist(), mul.tolist()
        self._neg_l, self._inv_l = neg.tolist(), inv.tolist()
        self._tables = True

    # -- identity ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (self.p, self.e, self.modulus) == (
            other.p,
            other.e,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e}

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not (0 <= a < self.q):
            raise NotInField(f"{a} is not an element of {self!r}")
        return int(a)

    # -- scalar arithmetic ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._tables:
            return self._add_l[a][b]
        if self.p == 2:
            return a ^ b
        return int(self.vadd(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        if self._tables:
            return self._neg_l[a]
        return int(self.vneg(np.int64(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self._tables:
            return self._mul_l[a][b]
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.e == 1:
            return pow(int(a), self.p - 2, self.p)
        if self._tables:
            r = self._inv_l[a]
        elif self._exp is not None:
            return int(self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)])
        else:
            r = 0
        if r == 0:
            raise DivisionByZero(f"{a} is not invertible (modulus is reducible)")
        return r

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        if self.e == 1:
            return pow(a, k, self.p)
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * k) % (self.q - 1)])
        acc = 1
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def frobenius(self, a: int, h: int) -> int:
        """``a ** (p ** h)`` for ``0 <= h < e``."""
        if not (0 <= h < self.e):
            raise InvalidExponentIndex(f"h must lie in [0, {self.e}), got {h}")
        return self.pow(a, self.p**h)

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # -- vectorised arithmetic -------------------------------------------------
    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self._tables:
            return self._add_t[a, b]
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.e):
            out += (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
            pw *= self.p
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        if self._tables:
            return self._neg_t[a]
        out = np.zeros_like(a)
        pw = 1
        for _ in range(self.e):
            out += ((-((a // pw) % self.p)) % self.p) * pw
            pw *= self.p
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        if self._tables:
            return self._mul_t[a, b]
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero entry has no inverse")
        if self.e == 1:
            return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p), otypes=[np.int64])(a)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        out = self._inv_t[a]
        if np.any(out == 0):
            raise DivisionByZero("element is not invertible (modulus is reducible)")
        return out

    def vfrobenius(self, a, h: int):
        if not (0 <= h < self.e):
            raise InvalidExponentIndex(f"h must lie in [0, {self.e}), got {h}")
        a = np.asarray(a, dtype=np.int64)
        if h == 0:
            return a.copy()
        table = np.array([self.frobenius(x, h) for x in range(self.q)], dtype=np.int64)
        return table[a]


@functools.lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> Field:
    """Cached constructor for the canonical field GF(p^e)."""
    return Field(p, e)


def field_new(p: int, e: int = 1) -> Field:
    return GF(p, e)


def field_of_order(q: int) -> Field:
    p, e = prime_power(q)
    return GF(p, e)


def field_from_json(obj: dict | int) -> Field:
    """Accepts ``{"p": p, "e": e}`` or a bare field order."""
    if isinstance(obj, int):
        return field_of_order(obj)
    return GF(int(obj["p"]), int(obj.get("e", 1)))
