"""Optimism classification for single graphs and graph streams.

A connected graph is optimistic when its distance matrix has more
positive than negative eigenvalues. Verdicts that are reported as
optimistic always come from exact arithmetic.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

import numpy as np

from . import exact
from .exact import Inertia
from .graph import DisconnectedGraphError, Graph, distance_matrix, is_connected
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .srg import SrgParams, detect_srg

log = logging.getLogger(__name__)

SCREEN_MARGIN = 1e-6
MAX_LABELED_ORDER = 8


class CapabilityError(RuntimeError):
    """Requested work is beyond what the built-in machinery supports."""


@dataclass
class OptimismReport:
    graph6: str
    order: int
    inertia: Inertia
    diameter: int
    srg: SrgParams | None = None
    float_spectrum: list[float] | None = None
    exact: bool = True

    @property
    def optimistic(self) -> bool:
        return self.inertia.n_plus > self.inertia.n_minus

    def to_json(self) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.order,
            "n_plus": self.inertia.n_plus,
            "n_zero": self.inertia.n_zero,
            "n_minus": self.inertia.n_minus,
            "optimistic": self.optimistic,
            "diameter": self.diameter,
            "srg": list(self.srg.as_tuple()) if self.srg else None,
        }
        if self.float_spectrum is not None:
            out["float_spectrum"] = self.float_spectrum
        return out


def classify(g: Graph, *, graph6: str | None = None, float_spectrum: bool = False) -> OptimismReport:
    """Exact inertia of the distance matrix of ``g`` and the optimism verdict."""
    if not is_connected(g):
        raise DisconnectedGraphError("cannot classify a disconnected graph")
    d = distance_matrix(g)
    return OptimismReport(
        graph6=graph6 if graph6 is not None else encode_graph6(g),
        order=g.n,
        inertia=exact.inertia(d),
        diameter=int(d.max()),
        srg=detect_srg(g),
        float_spectrum=exact.float_eigenvalues(d) if float_spectrum else None,
    )


def _screen(g: Graph, graph6: str, want_all: bool, exact_only: bool,
            float_spectrum: bool) -> OptimismReport | None:
    """Float screen with exact fallback.

    Returns None when the screen has proved the graph non-optimistic and
    the caller only wants optimistic ones.
    """
    d = distance_matrix(g)
    if not exact_only:
        ev = np.linalg.eigvalsh(d.astype(float))
        if np.all(np.abs(ev) > SCREEN_MARGIN):
            plus = int(np.sum(ev > 0))
            minus = g.n - plus
            if plus <= minus:
                if not want_all:
                    return None
                return OptimismReport(
                    graph6, g.n, Inertia(plus, 0, minus), int(d.max()), detect_srg(g),
                    exact.float_eigenvalues(d) if float_spectrum else None, exact=False)
    return OptimismReport(
        graph6, g.n, exact.inertia(d), int(d.max()), detect_srg(g),
        exact.float_eigenvalues(d) if float_spectrum else None)


@dataclass
class StreamStats:
    lines: int = 0
    disconnected: int = 0
    malformed: int = 0
    classified: int = 0
    emitted: int = 0
    exact_checks: int = 0
    errors: list[str] = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "lines": self.lines,
            "classified": self.classified,
            "disconnected_skipped": self.disconnected,
            "malformed": self.malformed,
            "emitted": self.emitted,
            "exact_checks": self.exact_checks,
        }


def _work(item: tuple[int, str, bool, bool, bool]):
    lineno, line, want_all, exact_only, float_spectrum = item
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        g = decode_graph6(text)
    except Graph6Error as exc:
        return lineno, "malformed", str(exc)
    if not is_connected(g):
        return lineno, "disconnected", None
    return lineno, "ok", _screen(g, text, want_all, exact_only, float_spectrum)


def filter_stream(
    lines: Iterable[str],
    *,
    emit_all: bool = False,
    exact_only: bool = False,
    float_spectrum: bool = False,
    continue_on_error: bool = False,
    workers: int = 1,
    stats: StreamStats | None = None,
) -> Iterator[OptimismReport]:
    """Classify graph6 lines, yielding reports in input order.

    By default only optimistic graphs are yielded. Blank lines are ignored,
    disconnected graphs are counted and skipped. A malformed line raises
    :class:`Graph6Error` naming its line number unless ``continue_on_error``.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    stats = stats if stats is not None else StreamStats()
    items = ((i, line, emit_all, exact_only, float_spectrum)
             for i, line in enumerate(lines, start=1) if line.strip())

    if workers == 1:
        results: Iterator = map(_work, items)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_work, items, chunksize=64)
    try:
        for lineno, status, payload in results:
            stats.lines += 1
            if status == "malformed":
                stats.malformed += 1
                msg = f"line {lineno}: {payload}"
                stats.errors.append(msg)
                if not continue_on_error:
                    raise Graph6Error(msg)
                log.warning("skipping malformed %s", msg)
                continue
            if status == "disconnected":
                stats.disconnected += 1
                continue
            stats.classified += 1
            if payload is None:
                continue
            if payload.exact:
                stats.exact_checks += 1
            if emit_all or payload.optimistic:
                stats.emitted += 1
                yield payload
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    if stats.disconnected:
        log.warning("skipped %d disconnected graphs", stats.disconnected)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose t-th graph6 pair is an edge iff bit t of ``mask`` is set."""
    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> t) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph(n, tuple(rows))


def _check_labeled_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n > MAX_LABELED_ORDER:
        raise CapabilityError(
            f"labelled enumeration is capped at n = {MAX_LABELED_ORDER}; for larger orders pipe an "
            f"isomorph-free generator into the filter, e.g. 'geng -c {n} | distspec filter'")


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on n vertices, by ascending mask."""
    _check_labeled_order(n)
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        if is_connected(g):
            yield g


@dataclass
class SearchSummary:
    n: int
    masks: int
    connected: int
    optimistic: int
    examples: list[str]
    seconds: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labelled_graphs": self.masks,
            "connected_scanned": self.connected,
            "optimistic_found": self.optimistic,
            "examples": self.examples,
        }


def exhaustive_check(n: int, *, engine: str = "kernel", block: int = 1 << 20,
                     progress=None) -> SearchSummary:
    """Classify every connected labelled graph of order n.

    ``engine="kernel"`` runs the compiled integer char-poly scan;
    ``engine="python"`` runs :func:`classify` on each graph and is only
    practical for n <= 6. Any optimistic graph the kernel reports is
    re-verified with :func:`classify` before it is counted as an example.
    """
    _check_labeled_order(n)
    start = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    examples: list[str] = []
    if engine == "python":
        connected = optimistic = 0
        for g in enumerate_labeled(n):
            connected += 1
            if classify(g).optimistic:
                optimistic += 1
                if len(examples) < 10:
                    examples.append(encode_graph6(g))
        return SearchSummary(n, total, connected, optimistic, examples, time.perf_counter() - start)
    if engine != "kernel":
        raise ValueError(f"unknown engine {engine!r}")

    from . import _kernel

    pi, pj = _kernel.pair_tables(n)
    hits = np.zeros(10, dtype=np.int64)
    connected = optimistic = 0
    for lo in range(0, total, block):
        hi = min(lo + block, total)
        c, o = _kernel.scan_block(n, lo, hi, pi, pj, hits)
        for mask in islice(hits, min(o, len(hits))):
            g = graph_from_mask(n, int(mask))
            if not classify(g).optimistic:
                raise AssertionError(f"kernel and exact inertia disagree on mask {int(mask)}")
            if len(examples) < 10:
                examples.append(encode_graph6(g))
        connected += c
        optimistic += o
        if progress is not None:
            progress(hi, total)
    return SearchSummary(n, total, connected, optimistic, examples, time.perf_counter() - start)
