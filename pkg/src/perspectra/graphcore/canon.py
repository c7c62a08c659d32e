"""Canonical forms for small graphs and isomorph-free bipartite enumeration."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator

from .graph import Graph, GraphError, _bits

CANONICAL_MAX_N = 10
CENSUS_MAX_N = 9


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


class _Search:
    """Individualisation-refinement search for the minimal leaf code.

    Two leaves with equal codes give an automorphism; children of a node that
    lie in one orbit of the automorphisms fixing the node's prefix have
    identical subtrees, so only one of them is explored.
    """

    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best: int | None = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def _same_orbit(self, prefix: list[int], explored: list[int], v: int) -> bool:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for perm in self.autos:
            if all(perm[p] == p for p in prefix):
                for a, b in enumerate(perm):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
        root = find(v)
        return any(find(u) == root for u in explored)

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _leaf_code(self.adj, order)
            if self.best is None or code < self.best:
                self.best, self.best_order = code, order
            elif code == self.best:
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.autos.append(perm)
            return
        explored: list[int] = []
        for v in cell:
            if explored and self.autos and self._same_orbit(prefix, explored, v):
                continue
            rest = [w for w in cell if w != v]
            self.run(cells[:idx] + [[v], rest] + cells[idx + 1:], prefix + [v])
            explored.append(v)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string.

    Degree refinement gives an ordered equitable partition; the form is the
    smallest upper-triangle adjacency string over all labellings reachable by
    individualising vertices and refining again.
    """
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form supports n <= {CANONICAL_MAX_N}")
    if g.n == 0:
        return b"\x00"
    search = _Search(g.adj)
    search.run([list(range(g.n))], [])
    code = search.best
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def _invariant(g: Graph) -> tuple:
    deg = g.degrees()
    return (g.n, g.m, tuple(sorted(
        (deg[v], tuple(sorted(deg[w] for w in _bits(g.adj[v])))) for v in range(g.n))))


def enumerate_connected_bipartite(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected bipartite graphs.

    Candidates are biadjacency matrices of part sizes (a, n - a) with rows in
    nondecreasing order (row permutations inside a part are isomorphisms).
    Representatives are emitted in generation order.
    """
    if n > CENSUS_MAX_N:
        raise GraphError(f"built-in enumeration supports n <= {CENSUS_MAX_N}")
    if n < 1:
        return
    if n == 1:
        yield Graph.empty(1)
        return
    seen: dict[tuple, set[bytes]] = {}
    for a in range(1, n // 2 + 1):
        b = n - a
        full_cols = (1 << b) - 1
        for rows in combinations_with_replacement(range(1, 1 << b), a):
            cover = 0
            for r in rows:
                cover |= r
            if cover != full_cols:
                continue
            adj = [r << a for r in rows] + [0] * b
            for i, r in enumerate(rows):
                for j in _bits(r):
                    adj[a + j] |= 1 << i
            g = Graph(n, tuple(adj))
            if not g.is_connected():
                continue
            bucket = seen.setdefault(_invariant(g), set())
            form = canonical_form(g)
            if form in bucket:
                continue
            bucket.add(form)
            yield g
