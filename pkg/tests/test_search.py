import random

import numpy as np
import pytest

from distspec import _kernel
from distspec import graph as gr
from distspec.corpus import VT_DIAMETER_3, VT_DIAMETER_4, load_self_complementary_17
from distspec.exact import char_poly, inertia, inertia_from_charpoly
from distspec.graph6 import Graph6Error, decode_graph6, encode_graph6
from distspec.paley import paley
from distspec.search import (
    CapabilityError,
    StreamStats,
    _screen,
    classify,
    enumerate_labeled,
    exhaustive_check,
    filter_stream,
    graph_from_mask,
)

CONNECTED_LABELLED = [1, 1, 4, 38, 728, 26704]


def test_classify_complete_graphs():
    assert classify(gr.complete_graph(1)).inertia.as_tuple() == (0, 1, 0)
    for n in range(2, 9):
        r = classify(gr.complete_graph(n))
        assert r.inertia.as_tuple() == (1, 0, n - 1)
        assert not r.optimistic


def test_classify_paley13():
    r = classify(paley(13))
    assert r.inertia.as_tuple() == (7, 0, 6) and r.optimistic
    assert r.srg.as_tuple() == (13, 6, 2, 3)


def test_classify_figure1_graph():
    _, text, g = load_self_complementary_17()
    r = classify(g, graph6=text)
    assert r.optimistic and r.diameter == 2
    assert r.inertia.n_plus == r.inertia.n_minus + 1
    assert r.inertia.as_tuple() == (9, 0, 8)
    assert r.srg is None


def test_classify_trees():
    for seed in range(60):
        n = 1 + seed % 12
        d = gr.distance_matrix(gr.random_tree(n, seed=seed))
        r = classify(gr.random_tree(n, seed=seed))
        assert r.inertia.as_tuple() == (1 if n > 1 else 0, 0 if n > 1 else 1, n - 1)
        assert inertia_from_charpoly(char_poly(d)) == r.inertia


def test_classify_rejects_disconnected():
    with pytest.raises(gr.DisconnectedGraphError):
        classify(decode_graph6("A?"))


def test_float_spectrum_on_request():
    r = classify(gr.complete_graph(4), float_spectrum=True)
    assert r.float_spectrum == pytest.approx([-1, -1, -1, 3])
    assert classify(gr.complete_graph(4)).float_spectrum is None


def test_isomorphism_invariance():
    rng = random.Random(21)
    done = 0
    while done < 100:
        g = gr.random_graph(rng.randint(2, 11), 0.4, rng)
        if not gr.is_connected(g):
            continue
        perm = list(range(g.n))
        rng.shuffle(perm)
        a, b = classify(g), classify(g.relabel(perm))
        assert a.inertia == b.inertia and a.optimistic == b.optimistic
        done += 1


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_labeled_counts(n):
    assert sum(1 for _ in enumerate_labeled(n)) == CONNECTED_LABELLED[n - 1]


def test_enumerate_labeled_order_three():
    graphs = list(enumerate_labeled(3))
    assert sorted(g.num_edges for g in graphs) == [2, 2, 2, 3]


def test_enumerate_labeled_cap():
    with pytest.raises(CapabilityError):
        next(enumerate_labeled(9))
    with pytest.raises(CapabilityError):
        exhaustive_check(9)


def test_mask_bit_order_matches_graph6():
    for mask in [0b1, 0b10, 0b100, 0b101, 0b111, 0b1000]:
        g = graph_from_mask(4, mask)
        bits = "".join("1" if g.has_edge(i, j) else "0" for j in range(4) for i in range(j))
        assert int(bits[::-1], 2) == mask


@pytest.mark.parametrize("n", range(1, 6))
def test_kernel_matches_exact_on_every_mask(n):
    pi, pj = _kernel.pair_tables(n)
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    rows = _kernel.mask_inertias(n, masks, pi, pj)
    for mask, row in zip(masks, rows):
        g = graph_from_mask(n, int(mask))
        if row[0] < 0:
            assert not gr.is_connected(g)
        else:
            assert tuple(row) == inertia(gr.distance_matrix(g)).as_tuple()


@pytest.mark.parametrize("n", [6, 7, 8])
def test_kernel_matches_exact_on_sampled_masks(n):
    rng = np.random.default_rng(n)
    m = n * (n - 1) // 2
    masks = rng.integers(0, 1 << m, size=300, dtype=np.int64)
    pi, pj = _kernel.pair_tables(n)
    rows = _kernel.mask_inertias(n, masks, pi, pj)
    for mask, row in zip(masks, rows):
        g = graph_from_mask(n, int(mask))
        if row[0] >= 0:
            assert tuple(row) == inertia(gr.distance_matrix(g)).as_tuple()


def test_exhaustive_engines_agree():
    for n in range(1, 6):
        a = exhaustive_check(n, engine="python")
        b = exhaustive_check(n, engine="kernel")
        assert (a.connected, a.optimistic) == (b.connected, b.optimistic) == (CONNECTED_LABELLED[n - 1], 0)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_exhaustive_no_optimistic(n):
    s = exhaustive_check(n)
    assert s.optimistic == 0 and s.examples == []


def test_stream_of_small_graphs_is_empty():
    lines = [encode_graph6(g) for n in range(1, 6) for g in enumerate_labeled(n)]
    stats = StreamStats()
    assert list(filter_stream(lines, stats=stats)) == []
    assert stats.classified == len(lines)


def test_stream_reference_graphs():
    lines = [VT_DIAMETER_3, "A?", VT_DIAMETER_4, encode_graph6(paley(13)), "Bw", ""]
    stats = StreamStats()
    out = list(filter_stream(lines, stats=stats))
    assert [r.graph6 for r in out] == [VT_DIAMETER_3, VT_DIAMETER_4, encode_graph6(paley(13))]
    assert out[2].inertia.as_tuple() == (7, 0, 6)
    assert all(r.exact for r in out)
    assert stats.disconnected == 1 and stats.lines == 5


def test_stream_emit_all_keeps_order():
    lines = [encode_graph6(gr.complete_graph(n)) for n in range(1, 8)] + [encode_graph6(paley(13))]
    out = list(filter_stream(lines, emit_all=True))
    assert [r.order for r in out] == [1, 2, 3, 4, 5, 6, 7, 13]


def test_stream_parallel_preserves_order():
    rng = random.Random(4)
    lines = [encode_graph6(gr.random_graph(rng.randint(2, 9), 0.5, rng)) for _ in range(300)]
    serial = [r.to_json() for r in filter_stream(lines, emit_all=True)]
    parallel = [r.to_json() for r in filter_stream(lines, emit_all=True, workers=2)]
    assert serial == parallel


def test_stream_malformed_lines():
    lines = ["Bw", "B!", "Bw"]
    with pytest.raises(Graph6Error, match="line 2"):
        list(filter_stream(lines, emit_all=True))
    stats = StreamStats()
    out = list(filter_stream(lines, emit_all=True, continue_on_error=True, stats=stats))
    assert len(out) == 2 and stats.malformed == 1


def test_screen_soundness_audit():
    # every verdict the float screen reaches alone must match exact inertia
    rng = random.Random(99)
    decided = 0
    for _ in range(400):
        g = gr.random_graph(rng.randint(2, 12), rng.choice([0.3, 0.5, 0.7]), rng)
        if not gr.is_connected(g):
            continue
        r = _screen(g, encode_graph6(g), True, False, False)
        exact = inertia(gr.distance_matrix(g))
        if not r.exact:
            decided += 1
            assert r.inertia == exact
        else:
            assert r.inertia == exact
    assert decided > 100


def test_screen_boundary_cases_go_exact():
    # P(9) has a zero distance eigenvalue: the screen must defer to exact arithmetic
    r = _screen(paley(9), encode_graph6(paley(9)), True, False, False)
    assert r.exact and r.inertia.as_tuple() == (1, 4, 4)


@pytest.mark.extended
def test_exhaustive_order_eight():
    s = exhaustive_check(8)
    assert s.connected == 251548592
    assert s.optimistic == 0
