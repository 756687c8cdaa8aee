"""Finite fields GF(p^m) with table arithmetic.

An element is the integer whose base-``p`` digits are its polynomial
coefficients, lowest degree first: for GF(4) the element ``x + 1`` is
``1 + 1*2 = 3``.  Extension fields are built over the lexicographically
smallest monic irreducible polynomial (coefficients compared high degree
first), so every run produces identical tables.
"""

from __future__ import annotations

from itertools import product


class NotPrimePowerError(ValueError):
    pass


def factorize(q: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= q:
        while q % d == 0:
            out[d] = out.get(d, 0) + 1
            q //= d
        d += 1
    if q > 1:
        out[q] = out.get(q, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q = p**m``, or raise NotPrimePowerError."""
    if q < 2:
        raise NotPrimePowerError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        shown = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(f.items()))
        raise NotPrimePowerError(f"{q} = {shown} is not a prime power")
    ((p, m),) = f.items()
    return p, m


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePowerError:
        return False
    return True


# polynomials over GF(p): coefficient lists, lowest degree first, no trailing zeros


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int):
    """Monic polynomials of degree ``deg`` in lexicographic order, high degree first."""
    for coeffs in product(range(p), repeat=deg):
        # coeffs = (c_{deg-1}, ..., c_0)
        yield list(reversed(coeffs)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _polymod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    for f in _monic_polys(p, m):
        if is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class GaloisField:
    """GF(q) for ``q = p**m`` with precomputed addition and multiplication tables."""

    def __init__(self, q: int):
        p, m = prime_power(q)
        self.p, self.m, self.q = p, m, q
        self.modulus = smallest_irreducible(p, m) if m > 1 else [0, 1]
        digits = [self._digits(a) for a in range(q)]
        self._add = [[self._pack([(x + y) % p for x, y in zip(da, db)]) for db in digits] for da in digits]
        self._mul = [[self._polymul(da, db) for db in digits] for da in digits]
        self._neg = [self._pack([(-x) % p for x in d]) for d in digits]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits: list[int]) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _polymul(self, a: list[int], b: list[int]) -> int:
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _polymod(prod, self.modulus, self.p) if self.m > 1 else _trim(prod)
        return self._pack(r + [0] * (self.m - len(r)))

    def __repr__(self) -> str:
        return f"GaloisField({self.q})"

    def __len__(self) -> int:
        return self.q

    @property
    def elements(self) -> range:
        return range(self.q)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        self._check(a)
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, k = a, 1
        while x != 1:
            x = self._mul[x][a]
            k += 1
        return k


_cache: dict[int, GaloisField] = {}


def gf(q: int) -> GaloisField:
    """The field of order ``q`` (cached; fields are immutable)."""
    if q not in _cache:
        _cache[q] = GaloisField(q)
    return _cache[q]
