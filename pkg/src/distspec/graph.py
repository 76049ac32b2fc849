"""Simple undirected graphs stored as neighbour bitmasks, plus the usual
graph algorithms needed for distance spectra: BFS distances, diameter,
complement, isomorphism and vertex-transitivity, and a few constructors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class DisconnectedGraphError(ValueError):
    """Raised when a distance-based quantity is requested for a disconnected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph order must be >= 1, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def bfs_levels(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex; -1 for unreachable ones."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_levels(g, 0)) >= 0


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths by BFS from every vertex.

    Raises DisconnectedGraphError if some pair is unreachable.
    """
    rows = [bfs_levels(g, v) for v in range(g.n)]
    if min(rows[0]) < 0:
        raise DisconnectedGraphError("distance matrix undefined for a disconnected graph")
    d = np.array(rows, dtype=np.int64)
    d.flags.writeable = False
    return d


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max()) if g.n > 1 else 0


# ---------------------------------------------------------------------------
# complement, isomorphism, automorphisms
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def _initial_colors(g: Graph) -> list[tuple]:
    # degree plus the multiset of BFS distances (unreachable counted as -1)
    out = []
    for v in range(g.n):
        lv = bfs_levels(g, v)
        out.append((g.degree(v), tuple(sorted(lv))))
    return out


def _rank(keys: list) -> tuple[list[int], tuple]:
    distinct = sorted(set(keys))
    index = {k: i for i, k in enumerate(distinct)}
    return [index[k] for k in keys], tuple(distinct)


def _refine(g: Graph, colors: list[int]) -> tuple[list[int], tuple]:
    """Iterate neighbour-colour counting until the partition is equitable.

    Returns the stable colouring and a trace of every round's signature set.
    Two graphs can only be matched by a colour-preserving bijection if their
    traces coincide.
    """
    trace = []
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(g.n):
            counts: dict[int, int] = {}
            for u in _bits(g.adj[v]):
                c = colors[u]
                counts[c] = counts.get(c, 0) + 1
            keys.append((colors[v], tuple(sorted(counts.items()))))
        colors, sig = _rank(keys)
        trace.append(sig)
        if len(sig) == ncolors:
            return colors, tuple(trace)
        ncolors = len(sig)


def _search(g: Graph, h: Graph, cg: list[int], ch: list[int]) -> list[int] | None:
    cg, tg = _refine(g, cg)
    ch, th = _refine(h, ch)
    if tg != th or sorted(cg) != sorted(ch):
        return None
    ncol = max(cg) + 1
    if ncol == g.n:
        phi = [0] * g.n
        where = {c: v for v, c in enumerate(ch)}
        for v in range(g.n):
            phi[v] = where[cg[v]]
        return phi if _is_isomorphism(g, h, phi) else None
    # individualize a vertex of the smallest non-trivial cell
    sizes: dict[int, int] = {}
    for c in cg:
        sizes[c] = sizes.get(c, 0) + 1
    target = min((s, c) for c, s in sizes.items() if s > 1)[1]
    v = cg.index(target)
    new_g = list(cg)
    new_g[v] = ncol
    for w in range(h.n):
        if ch[w] != target:
            continue
        new_h = list(ch)
        new_h[w] = ncol
        phi = _search(g, h, new_g, new_h)
        if phi is not None:
            return phi
    return None


def _is_isomorphism(g: Graph, h: Graph, phi: Sequence[int]) -> bool:
    if sorted(phi) != list(range(g.n)) or g.num_edges != h.num_edges:
        return False
    return all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())


def are_isomorphic(g: Graph, h: Graph, *, fix: tuple[int, int] | None = None) -> list[int] | None:
    """Find a bijection ``phi`` with ``phi(E(g)) == E(h)``, or return None.

    Individualization-refinement with backtracking; fine up to a few dozen
    vertices, exponential in the worst case beyond that. ``fix=(u, w)``
    restricts the search to maps sending ``u`` to ``w``.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    cg, sg = _rank(_initial_colors(g))
    ch, sh = _rank(_initial_colors(h))
    if sg != sh:
        return None
    if fix is not None:
        u, w = fix
        if cg[u] != ch[w]:
            return None
        cg[u] = ch[w] = len(sg)
    phi = _search(g, h, cg, ch)
    if phi is not None and not _is_isomorphism(g, h, phi):
        raise AssertionError("isomorphism search returned an invalid map")
    return phi


def is_self_complementary(g: Graph) -> bool:
    return are_isomorphic(g, complement(g)) is not None


def vertex_orbit(g: Graph, v: int = 0) -> set[int]:
    """Orbit of ``v`` under Aut(g).

    Every automorphism found is applied to the orbit so far, so targets
    already reached are never searched again.
    """
    orbit = {v}
    found: list[list[int]] = []
    for w in range(g.n):
        if w in orbit:
            continue
        phi = are_isomorphic(g, g, fix=(v, w))
        if phi is None:
            continue
        found.append(phi)
        stack = list(orbit)
        while stack:
            x = stack.pop()
            for f in found:
                y = f[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
    return orbit


def is_vertex_transitive(g: Graph) -> bool:
    return len(vertex_orbit(g, 0)) == g.n


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"parts must be a nonempty list of positive sizes, got {parts!r}")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return Graph.from_edges(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if label[u] != label[v]))


def rook_graph(m: int) -> Graph:
    """m x m rook's graph: cells adjacent when they share a row or a column."""
    if m < 1:
        raise ValueError(f"rook graph needs m >= 1, got {m}")
    cells = [(r, c) for r in range(m) for c in range(m)]
    return Graph.from_edges(
        m * m,
        ((i, j) for i, j in itertools.combinations(range(m * m), 2)
         if cells[i][0] == cells[j][0] or cells[i][1] == cells[j][1]),
    )


def shrikhande_graph() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set {±(0,1), ±(1,0), ±(1,1)}."""
    gens = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    idx = lambda a, b: 4 * (a % 4) + (b % 4)  # noqa: E731
    return Graph.from_edges(
        16,
        ((idx(a, b), idx(a + da, b + db)) for a in range(4) for b in range(4)
         for da, db in gens if idx(a, b) < idx(a + da, b + db)),
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labelled tree, decoded from a random Prüfer sequence."""
    _check_order(n)
    if n == 1:
        return Graph(1, (0,))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p))


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"graph order must be >= 1, got {n}")
