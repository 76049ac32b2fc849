"""Finite fields GF(p^k) and Paley graphs.

Field elements are ints in ``range(q)``: the coefficient vector
``(c0, c1, ..., c_{k-1})`` of ``c0 + c1 x + ...`` is stored as
``c0 + c1 p + c2 p^2 + ...``, so the constant coefficient varies fastest.
The same integer is the element's vertex number in the Paley graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                break
            return p, k
    raise ValueError("not a prime power")


# polynomials over F_p as coefficient lists, constant term first

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int):
    for low in itertools.product(range(p), repeat=deg):
        # low[0] is the highest lower coefficient so iteration is in index order
        yield list(reversed(low)) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


class NotPaleyError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]
    _mul: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def q(self) -> int:
        return self.p ** self.k

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coeffs(self, c: Sequence[int]) -> int:
        return sum((x % self.p) * self.p ** i for i, x in enumerate(c))

    def add(self, a: int, b: int) -> int:
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.from_coeffs([x - y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def mul(self, a: int, b: int) -> int:
        if self._mul:
            return self._mul[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        if self.k == 1:
            return prod[0] % self.p
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def power(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        p = self.p
        if self.k == 1:
            return pow(a, -1, p)
        r0, r1 = list(self.modulus), _trim(self.coeffs(a))
        s0, s1 = [0], [1]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        # r1 is a nonzero constant
        c = pow(r1[0], -1, p)
        return self.from_coeffs(_pad([x * c for x in s1], self.k))

    def is_square(self, a: int) -> bool:
        """Euler's criterion: a^((q-1)/2) == 1. Only meaningful for odd q."""
        if self.p == 2:
            raise NotPaleyError("every element of a field of characteristic 2 is a square")
        if a == 0:
            raise ValueError("is_square is undefined for zero")
        return self.power(a, (self.q - 1) // 2) == 1


def _pad(c: list[int], k: int) -> list[int]:
    return (c + [0] * k)[:k]


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([x % p for x in a])
    q = [0] * max(len(a) - len(b) + 1, 1)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return _trim(q), a


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """GF(p^k) modulo the smallest monic irreducible of degree k, unless given.

    "Smallest" compares the lower coefficients as the base-p number
    c0 + c1 p + ..., matching the element encoding.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        if k == 1:
            modulus = (0, 1)
        else:
            modulus = next(tuple(f) for f in _monic_polys(p, k) if is_irreducible(f, p))
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
    f = FiniteField(p, k, tuple(modulus))
    q = f.q
    table = tuple(tuple(f._mul_slow(a, b) for b in range(q)) for a in range(q)) if q <= 256 else ()
    return FiniteField(p, k, tuple(modulus), table)


def paley_graph(f: FiniteField) -> Graph:
    """Vertices are the field elements; a ~ b iff a - b is a nonzero square."""
    if f.q % 4 != 1:
        raise NotPaleyError(f"Paley graphs need q = 1 (mod 4), got q = {f.q}")
    squares = {a for a in range(1, f.q) if f.is_square(a)}
    rows = [0] * f.q
    for a in range(f.q):
        for b in range(f.q):
            if a != b and f.sub(a, b) in squares:
                rows[a] |= 1 << b
    return Graph(f.q, tuple(rows))


def paley(q: int) -> Graph:
    """Paley graph of the field of order q (a prime power, q = 1 mod 4)."""
    try:
        p, k = prime_power(q)
    except ValueError:
        raise NotPaleyError(f"{q} is not a prime power") from None
    if q % 4 != 1:
        raise NotPaleyError(f"Paley graphs need q = 1 (mod 4), got q = {q}")
    return paley_graph(make_field(p, k))


def is_square(f: FiniteField, a: int) -> bool:
    return f.is_square(a)
