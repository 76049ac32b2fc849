"""Strongly regular graphs: recognition and closed-form spectra.

Eigenvalues are carried as exact quadratic surds so that coincidences
(for instance an eigenvalue that is exactly zero) are decided by equality,
never by a float threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, NamedTuple, Union

from .exact import Inertia, inertia
from .graph import Graph, is_connected

Rational = Union[int, Fraction]


class InfeasibleParametersError(ValueError):
    pass


def _squarefree_split(n: int) -> tuple[int, int]:
    """Write n = s*s*r with r square-free; return (s, r)."""
    if n < 0:
        raise ValueError("radicand must be nonnegative")
    s, r = 1, 1
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
            s *= f
        if n % f == 0:
            n //= f
            r *= f
        f += 1
    return s, r * n


@total_ordering
@dataclass(frozen=True)
class Surd:
    """Exact number ``a + b*sqrt(d)`` with rational a, b and square-free d.

    Rational values are stored with ``b == 0`` and ``d == 0``.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0 or self.d == 0:
            object.__setattr__(self, "b", Fraction(0))
            object.__setattr__(self, "d", 0)
            return
        s, r = _squarefree_split(self.d)
        if r == 1:
            object.__setattr__(self, "a", self.a + self.b * s)
            object.__setattr__(self, "b", Fraction(0))
            object.__setattr__(self, "d", 0)
        elif s != 1:
            object.__setattr__(self, "b", self.b * s)
            object.__setattr__(self, "d", r)

    @classmethod
    def sqrt(cls, n: int) -> Surd:
        return cls(Fraction(0), Fraction(1), n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _common_d(self, other: Surd) -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"cannot combine sqrt({self.d}) and sqrt({other.d})")
        return self.d or other.d

    @staticmethod
    def _coerce(x: Surd | Rational) -> Surd:
        return x if isinstance(x, Surd) else Surd(Fraction(x))

    def __add__(self, other: Surd | Rational) -> Surd:
        o = self._coerce(other)
        return Surd(self.a + o.a, self.b + o.b, self._common_d(o))

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other: Surd | Rational) -> Surd:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> Surd:
        return self._coerce(other) - self

    def __mul__(self, other: Surd | Rational) -> Surd:
        o = self._coerce(other)
        d = self._common_d(o)
        return Surd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> Surd:
        q = Fraction(other)
        return Surd(self.a / q, self.b / q, self.d)

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: the larger of a^2 and b^2 d wins (never equal, d square-free)
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def __lt__(self, other: Surd | Rational) -> bool:
        return (self - other).sign() < 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Surd(Fraction(other))
        if not isinstance(other, Surd):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def as_integers(self) -> tuple[int, int, int, int]:
        """``(A, B, d, C)`` with value ``(A + B*sqrt(d)) / C`` and ``C > 0``."""
        c = math.lcm(self.a.denominator, self.b.denominator)
        return (int(self.a * c), int(self.b * c), self.d, c)

    def __str__(self) -> str:
        A, B, d, C = self.as_integers()
        if B == 0:
            return str(A) if C == 1 else f"{A}/{C}"
        rad = f"sqrt({d})" if abs(B) == 1 else f"{abs(B)}*sqrt({d})"
        if A:
            num = f"{A}{'+' if B > 0 else '-'}{rad}"
        else:
            num = rad if B > 0 else f"-{rad}"
        if C == 1:
            return num
        return f"({num})/{C}" if A else f"{num}/{C}"


class SpectrumTable:
    """Distinct eigenvalues with multiplicities, sorted by decreasing value."""

    def __init__(self, entries: Iterable[tuple[Surd | Rational, int]]) -> None:
        merged: dict[Surd, int] = {}
        for value, mult in entries:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            s = Surd._coerce(value)
            merged[s] = merged.get(s, 0) + mult
        self.entries: list[tuple[Surd, int]] = sorted(merged.items(), key=lambda e: e[0], reverse=True)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectrumTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        body = ", ".join(f"{v} x{m}" for v, m in self.entries)
        return f"SpectrumTable({{{body}}})"

    def as_dict(self) -> dict[Surd, int]:
        return dict(self.entries)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def trace(self) -> Surd:
        total = Surd(Fraction(0))
        for v, m in self.entries:
            total = total + v * m
        return total

    def inertia(self) -> Inertia:
        plus = sum(m for v, m in self.entries if v.sign() > 0)
        minus = sum(m for v, m in self.entries if v.sign() < 0)
        return Inertia(plus, self.order - plus - minus, minus)

    def float_values(self) -> list[float]:
        return sorted(float(v) for v, m in self.entries for _ in range(m))


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if not 0 < k < v - 1:
            raise InfeasibleParametersError(f"need 0 < k < v-1, got v={v}, k={k}")
        if mu < 1:
            raise InfeasibleParametersError("mu must be >= 1 for a connected, non-complete SRG")
        if lam < 0 or lam >= k or mu > k:
            raise InfeasibleParametersError(f"lambda={lam}, mu={mu} out of range for k={k}")
        if k * (k - lam - 1) != (v - k - 1) * mu:
            raise InfeasibleParametersError(
                f"k(k-lambda-1) = {k * (k - lam - 1)} differs from (v-k-1)mu = {(v - k - 1) * mu}")
        if self.discriminant <= 0:
            raise InfeasibleParametersError("discriminant must be positive")

    @property
    def discriminant(self) -> int:
        return (self.lam - self.mu) ** 2 + 4 * (self.k - self.mu)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


def detect_srg(g: Graph) -> SrgParams | None:
    """SRG parameters of ``g`` from its common-neighbour counts, or None.

    Complete graphs and disconnected graphs return None.
    """
    if g.n < 3 or not is_connected(g):
        return None
    k = g.degree(0)
    if any(g.degree(v) != k for v in range(g.n)):
        return None
    lam = mu = None
    for u in range(g.n):
        for w in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[w]).bit_count()
            if g.has_edge(u, w):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if mu is None or lam is None:
        return None
    return SrgParams(g.n, k, lam, mu)


def adjacency_spectrum(p: SrgParams) -> SpectrumTable:
    v, k, lam, mu = p.as_tuple()
    delta = p.discriminant
    theta = Surd(Fraction(lam - mu, 2), Fraction(1, 2), delta)
    tau = Surd(Fraction(lam - mu, 2), Fraction(-1, 2), delta)
    e = 2 * k + (v - 1) * (lam - mu)
    if e == 0:
        shift = 0
    else:
        root = math.isqrt(delta)
        if root * root != delta or e % root:
            raise InfeasibleParametersError(f"non-integral eigenvalue multiplicities for {p.as_tuple()}")
        shift = e // root
    if (v - 1 - shift) % 2:
        raise InfeasibleParametersError(f"non-integral eigenvalue multiplicities for {p.as_tuple()}")
    m_theta = (v - 1 - shift) // 2
    m_tau = (v - 1 + shift) // 2
    if m_theta < 0 or m_tau < 0:
        raise InfeasibleParametersError(f"negative eigenvalue multiplicity for {p.as_tuple()}")
    return SpectrumTable([(k, 1), (theta, m_theta), (tau, m_tau)])


def distance_eigenvalue_map(p: SrgParams, nu: Surd | Rational) -> Surd:
    """Image of an adjacency eigenvalue under D = (2/mu)A^2 + (1 - 2 lambda/mu)A - (2k/mu)I."""
    nu = Surd._coerce(nu)
    mu = Fraction(p.mu)
    return nu * nu * (2 / mu) + nu * (1 - 2 * p.lam / mu) - 2 * p.k / mu


def distance_spectrum_from_params(p: SrgParams) -> SpectrumTable:
    return SpectrumTable((distance_eigenvalue_map(p, nu), m) for nu, m in adjacency_spectrum(p))


def conference_params(v: int) -> SrgParams:
    if v < 5 or v % 4 != 1:
        raise InfeasibleParametersError(f"conference graphs need v = 1 (mod 4) and v >= 5, got {v}")
    return SrgParams(v, (v - 1) // 2, (v - 5) // 4, (v - 1) // 4)


def is_conference(p: SrgParams) -> bool:
    v = p.v
    return v % 4 == 1 and 4 * p.k == 2 * (v - 1) and 4 * p.lam == v - 5 and 4 * p.mu == v - 1


def conference_distance_spectrum(v: int) -> SpectrumTable:
    """{3(v-1)/2 x1, (-3 + sqrt v)/2 x(v-1)/2, (-3 - sqrt v)/2 x(v-1)/2}.

    Optimistic exactly when v > 9; at v = 9 one eigenvalue is exactly zero.
    """
    conference_params(v)
    half = (v - 1) // 2
    return SpectrumTable([
        (Fraction(3 * (v - 1), 2), 1),
        (Surd(Fraction(-3, 2), Fraction(1, 2), v), half),
        (Surd(Fraction(-3, 2), Fraction(-1, 2), v), half),
    ])


def eigenvalue_multiplicity(m, value: Surd | Rational) -> int:
    """Exact multiplicity of ``value`` as an eigenvalue of the rational symmetric matrix ``m``.

    For irrational ``a + b sqrt(d)`` the rational matrix
    M^2 - 2aM + (a^2 - b^2 d)I has nullity equal to the multiplicity of the
    value plus that of its conjugate, and conjugates occur equally often in
    a rational matrix, so half the nullity is returned.
    """
    value = Surd._coerce(value)
    rows = [[Fraction(int(x)) if not isinstance(x, Fraction) else x for x in row] for row in m]
    n = len(rows)
    if value.is_rational:
        shifted = [[rows[i][j] - (value.a if i == j else 0) for j in range(n)] for i in range(n)]
        return inertia(shifted).n_zero
    a, norm = value.a, value.a * value.a - value.b * value.b * value.d
    sq = [[sum(rows[i][t] * rows[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    quad = [[sq[i][j] - 2 * a * rows[i][j] + (norm if i == j else 0) for j in range(n)] for i in range(n)]
    return inertia(quad).n_zero // 2


def matrix_has_spectrum(m, table: SpectrumTable) -> bool:
    """True iff the exact spectrum of ``m`` is the multiset described by ``table``."""
    if table.order != len(m):
        return False
    return all(eigenvalue_multiplicity(m, v) == mult for v, mult in table)


class FamilyResult(NamedTuple):
    params: SrgParams
    spectrum: SpectrumTable
    gap: int


def family_m2_params(m: int) -> SrgParams:
    if m <= 2:
        raise InfeasibleParametersError(f"the (m^2, 3(m-1), m, 6) family needs m > 2, got {m}")
    return SrgParams(m * m, 3 * (m - 1), m, 6)


def family_m2_spectrum(m: int) -> FamilyResult:
    """Distance spectrum of an SRG(m^2, 3(m-1), m, 6), derived from its parameters."""
    p = family_m2_params(m)
    table = distance_spectrum_from_params(p)
    return FamilyResult(p, table, table.inertia().gap)


__all__ = [
    "FamilyResult", "InfeasibleParametersError", "SpectrumTable", "SrgParams", "Surd",
    "adjacency_spectrum", "conference_distance_spectrum", "conference_params",
    "detect_srg", "distance_eigenvalue_map", "eigenvalue_multiplicity", "matrix_has_spectrum", "distance_spectrum_from_params", "family_m2_params",
    "family_m2_spectrum", "is_conference",
]
