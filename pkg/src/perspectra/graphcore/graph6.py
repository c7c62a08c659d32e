"""graph6 codec (bit-exact with the nauty/networkx format)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    # 18-bit form, sufficient for the 64-vertex cap
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", pos)
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise Graph6Error("unsupported or truncated vertex count", 1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        start = 4
    else:
        n = ord(s[0]) - 63
        start = 1
    if n > 64:
        raise Graph6Error(f"{n} vertices exceeds the supported maximum", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[start:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", start + min(len(body), need))
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[idx // 6]) - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if nbits % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("nonzero padding bits", start + need - 1)
    return Graph(n, tuple(rows))


def read_graph6_stream(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)
