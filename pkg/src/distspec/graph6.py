"""graph6 encoder/decoder (McKay's formats.txt).

The codec is bit-exact and does not canonicalize: a graph is encoded with
exactly the labelling it carries.
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 258047


class Graph6Error(ValueError):
    pass


class UnsupportedFormatError(Graph6Error):
    """Input is sparse6 or digraph6 rather than graph6."""

    def __init__(self, fmt: str) -> None:
        super().__init__(f"{fmt} input is not supported (graph6 only)")
        self.format = fmt


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("orders above 258047 are not supported")
    if len(data) < 4:
        raise Graph6Error("truncated order field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if s.startswith(">>sparse6<<") or s.startswith(":"):
        raise UnsupportedFormatError("sparse6")
    if s.startswith(">>digraph6<<") or s.startswith("&"):
        raise UnsupportedFormatError("digraph6")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 string") from exc
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at position {pos} outside 63..126")

    n, head = _decode_order(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = data[head:]
    if len(body) != nbytes:
        raise Graph6Error(f"order {n} needs {nbytes} body bytes, got {len(body)}")

    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad

    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise Graph6Error(f"order {g.n} exceeds graph6 limit {MAX_ORDER}")
    out = [_encode_order(g.n)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)
