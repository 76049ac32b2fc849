import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from distspec.graph import Graph, complete_graph, path
from distspec.graph6 import Graph6Error, UnsupportedFormatError, decode_graph6, encode_graph6


def reference_encode(g: Graph) -> str:
    """Bit-string transcription of the format description, independent of the codec."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(int(f"{n:018b}"[i:i + 6], 2) + 63) for i in (0, 6, 12))
    bits = "".join("1" if g.has_edge(i, j) else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return head + "".join(chr(int(bits[i:i + 6], 2) + 63) for i in range(0, len(bits), 6))


def test_single_vertex():
    g = decode_graph6("@")
    assert g.n == 1 and g.num_edges == 0
    assert encode_graph6(Graph(1, (0,))) == "@"


def test_triangle():
    assert decode_graph6("Bw") == complete_graph(3)
    assert encode_graph6(complete_graph(3)) == "Bw"


def test_path_p3():
    assert encode_graph6(path(3)) == "Bg"
    assert sorted(decode_graph6("Bg").edges()) == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text,n,diam", [
    ("UsaCC@u]QwLODoIo@wBI?So?{??@~??lw?h{?Bv?", 22, 3),
    ("YsP@?__C?A?O@@AA?GOCA?C??_G?g?@O?G??@?????o_?Cc???S???g_", 26, 4),
])
def test_reference_strings(text, n, diam):
    from distspec.graph import diameter, is_connected
    g = decode_graph6(text)
    assert g.n == n and is_connected(g) and diameter(g) == diam
    assert encode_graph6(g) == text


def test_header_and_whitespace_are_stripped():
    assert decode_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("bad", ["Bww", "B", "Bx", "Bw\x7f", "B ", "Dw"])
def test_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_rejects_nonzero_padding():
    # 'x' = 57 = 111001: the pad bits after the three edge bits are not zero
    with pytest.raises(Graph6Error, match="padding"):
        decode_graph6("Bx")


@pytest.mark.parametrize("text,fmt", [(":Bc", "sparse6"), (">>sparse6<<:Bc", "sparse6"), ("&B?", "digraph6")])
def test_other_formats_named(text, fmt):
    with pytest.raises(UnsupportedFormatError) as info:
        decode_graph6(text)
    assert info.value.format == fmt


def test_exhaustive_round_trip_small():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for r in range(len(pairs) + 1):
            for edges in itertools.combinations(pairs, r):
                g = Graph.from_edges(n, edges)
                s = encode_graph6(g)
                assert s == reference_encode(g)
                assert decode_graph6(s) == g


def test_large_order_header():
    rng = random.Random(7)
    for n in (62, 63, 64, 100, 200):
        g = Graph.from_edges(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < 0.1))
        s = encode_graph6(g)
        assert s == reference_encode(g)
        assert (s[0] == "~") == (n >= 63)
        assert decode_graph6(s) == g
        assert all(63 <= ord(c) <= 126 for c in s)


@st.composite
def graphs(draw, max_n=200):
    n = draw(st.integers(1, max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << m) - 1)) if m else 0
    pairs = [(i, j) for j in range(n) for i in range(j)]
    return Graph.from_edges(n, (pairs[t] for t in range(m) if mask >> t & 1))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_round_trip_property(g):
    s = encode_graph6(g)
    assert all(63 <= ord(c) <= 126 for c in s)
    assert decode_graph6(s) == g


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=40), st.sampled_from([-1, 1]))
def test_length_mismatch_rejected(g, delta):
    s = encode_graph6(g)
    t = s[:-1] if delta < 0 else s + "?"
    if len(t) == len(s) or g.n == 1 and delta < 0:
        return
    with pytest.raises(Graph6Error):
        decode_graph6(t)
