"""Exact linear algebra on symmetric rational matrices.

Python ints and :class:`fractions.Fraction` supply the arbitrary precision.
Signs decided here never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

Matrix = Sequence[Sequence]


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    def __post_init__(self) -> None:
        if min(self.n_plus, self.n_zero, self.n_minus) < 0:
            raise ValueError("inertia counts must be nonnegative")

    @property
    def order(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def gap(self) -> int:
        return self.n_plus - self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


class NotSymmetricError(ValueError):
    pass


def _to_fractions(m: Matrix) -> list[list[Fraction]]:
    rows = [[Fraction(int(x)) if isinstance(x, np.integer) else Fraction(x) for x in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def inertia(m: Matrix) -> Inertia:
    """Signature of a symmetric matrix by symmetric congruence reduction.

    Diagonal pivot: largest absolute value in the active block, lowest index
    on ties. With an all-zero diagonal the largest off-diagonal entry a_ij
    is split off as the hyperbolic block [[0, a], [a, 0]] (one + and one -).
    """
    a = _to_fractions(m)
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")

    active = list(range(n))
    plus = minus = 0
    while active:
        best = None
        for i in active:
            v = a[i][i]
            if v and (best is None or abs(v) > abs(a[best][best])):
                best = i
        if best is not None:
            p = a[best][best]
            if p > 0:
                plus += 1
            else:
                minus += 1
            active.remove(best)
            col = {r: a[r][best] for r in active if a[r][best]}
            for r, ar in col.items():
                f = ar / p
                row = a[r]
                for s, as_ in col.items():
                    row[s] -= f * as_
            continue

        pair = None
        for pos, i in enumerate(active):
            for j in active[pos + 1:]:
                v = a[i][j]
                if v and (pair is None or abs(v) > abs(a[pair[0]][pair[1]])):
                    pair = (i, j)
        if pair is None:
            break
        i, j = pair
        h = a[i][j]
        plus += 1
        minus += 1
        active.remove(i)
        active.remove(j)
        # Schur complement of [[0, h], [h, 0]]: C - (x_i y_j + x_j y_i) / h
        xi = {r: a[r][i] for r in active}
        xj = {r: a[r][j] for r in active}
        for r in active:
            ri, rj = xi[r] / h, xj[r] / h
            if not (ri or rj):
                continue
            row = a[r]
            for s in active:
                row[s] -= ri * xj[s] + rj * xi[s]
    return Inertia(plus, n - plus - minus, minus)


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by rational Gaussian elimination with row pivoting."""
    a = _to_fractions(m)
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det *= p
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def char_poly(m: Matrix) -> list[int]:
    """Coefficients of det(xI - M), constant term first (Faddeev-LeVerrier).

    Every division is exact for integer input, so all work stays in ints.
    """
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    for row, orig in zip(a, m):
        if any(x != y for x, y in zip(row, orig)):
            raise ValueError("char_poly requires integer entries")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            mk[i][i] += c_prev
        mk_cols = list(zip(*mk))
        am = [[sum(x * y for x, y in zip(row, col)) for col in mk_cols] for row in a]
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
        coeffs[n - k] = q
        mk = am
    return coeffs


def _sign_changes(seq: Sequence[int]) -> int:
    signs = [x > 0 for x in seq if x]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def inertia_from_charpoly(coeffs: Sequence[int]) -> Inertia:
    """Descartes' rule on a real-rooted polynomial (constant term first).

    Only valid when every root is real, e.g. for the characteristic
    polynomial of a symmetric matrix; the caller guarantees that.
    """
    if not any(coeffs):
        raise ValueError("zero polynomial has no inertia")
    c = list(coeffs)
    while not c[-1]:
        c.pop()
    zeros = next(i for i, x in enumerate(c) if x)
    c = c[zeros:]
    plus = _sign_changes(c)
    minus = _sign_changes([x if i % 2 == 0 else -x for i, x in enumerate(c)])
    return Inertia(plus, zeros, minus)


def float_eigenvalues(m: Matrix, *, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol`` times the initial Frobenius norm.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T):
        raise NotSymmetricError("float_eigenvalues needs a symmetric matrix")
    target = tol * np.linalg.norm(a)

    def off(x: np.ndarray) -> float:
        return float(np.sqrt(2.0 * np.sum(np.triu(x, 1) ** 2)))

    for _ in range(max_sweeps):
        if off(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0)) if theta else 1.0
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    return sorted(float(x) for x in np.diag(a))
