"""Compiled inner loop for the built-in exhaustive scan.

Each adjacency mask is decoded, its distance matrix built by bitset BFS,
and the inertia read off the integer characteristic polynomial with
Descartes' rule. Everything stays in int64, which is exact for n <= 8:
entries of the Faddeev-LeVerrier iterates stay below ~1e12 there.

Bit t of a mask is the t-th pair in graph6 column order
(0,1), (0,2), (1,2), (0,3), ...
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_KERNEL_ORDER = 8


def pair_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    ii, jj = [], []
    for j in range(1, n):
        for i in range(j):
            ii.append(i)
            jj.append(j)
    return np.array(ii, dtype=np.int64), np.array(jj, dtype=np.int64)


@njit(cache=True)
def _sign_changes(c, lo, hi, alternate):
    last = 0
    changes = 0
    for t in range(lo, hi + 1):
        x = c[t]
        if alternate and (t - lo) % 2 == 1:
            x = -x
        if x == 0:
            continue
        s = 1 if x > 0 else -1
        if last != 0 and s != last:
            changes += 1
        last = s
    return changes


@njit(cache=True)
def _mask_inertia(n, mask, pi, pj, adj, dist, mk, am, d2, coeffs, out):
    """Fill out = (n_plus, n_zero, n_minus); return False if disconnected."""
    for v in range(n):
        adj[v] = 0
    for t in range(pi.shape[0]):
        if (mask >> t) & 1:
            adj[pi[t]] |= 1 << pj[t]
            adj[pj[t]] |= 1 << pi[t]
    full = (1 << n) - 1
    for s in range(n):
        for v in range(n):
            dist[s, v] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            nxt &= ~seen
            seen |= nxt
            for v in range(n):
                if (nxt >> v) & 1:
                    dist[s, v] = d
            frontier = nxt
        if seen != full:
            return False

    # Faddeev-LeVerrier, M_k = D M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(D M_k) / k.
    # Every M_k is a polynomial in D, hence symmetric: only upper triangles
    # are multiplied and traces are elementwise sums. M_1 = I and M_2 = D
    # need no product; the last trace reuses D^2 so M_n is never formed.
    coeffs[n] = 1
    if n == 1:
        coeffs[0] = 0
    else:
        coeffs[n - 1] = 0
        sq = 0
        for i in range(n):
            for j in range(n):
                sq += dist[i, j] * dist[i, j]
                mk[i, j] = dist[i, j]
        coeffs[n - 2] = -sq // 2
        for k in range(3, n + 1):
            if k == n and n > 3:
                tr = 0
                for i in range(n):
                    for j in range(n):
                        tr += d2[i, j] * mk[i, j]
                coeffs[0] = -tr // n
                break
            for i in range(n):
                for j in range(i, n):
                    acc = 0
                    for l in range(n):
                        acc += dist[i, l] * mk[l, j]
                    am[i, j] = acc
                    am[j, i] = acc
            if k == 3:
                for i in range(n):
                    for j in range(n):
                        d2[i, j] = am[i, j]
            c_prev = coeffs[n - k + 1]
            for i in range(n):
                am[i, i] += c_prev
            tr = 0
            for i in range(n):
                for j in range(n):
                    tr += dist[i, j] * am[i, j]
                    mk[i, j] = am[i, j]
            coeffs[n - k] = -tr // k

    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    out[0] = _sign_changes(coeffs, zeros, n, False)
    out[1] = zeros
    out[2] = _sign_changes(coeffs, zeros, n, True)
    return True


@njit(cache=True)
def mask_inertias(n, masks, pi, pj):
    """Inertia rows for each mask; disconnected masks get (-1, -1, -1)."""
    res = np.full((masks.shape[0], 3), -1, dtype=np.int64)
    adj = np.zeros(n, dtype=np.int64)
    dist = np.zeros((n, n), dtype=np.int64)
    mk = np.zeros((n, n), dtype=np.int64)
    am = np.zeros((n, n), dtype=np.int64)
    d2 = np.zeros((n, n), dtype=np.int64)
    coeffs = np.zeros(n + 1, dtype=np.int64)
    out = np.zeros(3, dtype=np.int64)
    for b in range(masks.shape[0]):
        if _mask_inertia(n, masks[b], pi, pj, adj, dist, mk, am, d2, coeffs, out):
            res[b, 0] = out[0]
            res[b, 1] = out[1]
            res[b, 2] = out[2]
    return res


@njit(cache=True)
def scan_block(n, lo, hi, pi, pj, hits):
    """Scan masks in [lo, hi); return (connected, optimistic).

    The first ``len(hits)`` optimistic masks are written into ``hits``.
    """
    adj = np.zeros(n, dtype=np.int64)
    dist = np.zeros((n, n), dtype=np.int64)
    mk = np.zeros((n, n), dtype=np.int64)
    am = np.zeros((n, n), dtype=np.int64)
    d2 = np.zeros((n, n), dtype=np.int64)
    coeffs = np.zeros(n + 1, dtype=np.int64)
    out = np.zeros(3, dtype=np.int64)
    connected = 0
    optimistic = 0
    for mask in range(lo, hi):
        if not _mask_inertia(n, mask, pi, pj, adj, dist, mk, am, d2, coeffs, out):
            continue
        connected += 1
        if out[0] > out[2]:
            if optimistic < hits.shape[0]:
                hits[optimistic] = mask
            optimistic += 1
    return connected, optimistic
