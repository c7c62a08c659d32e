"""Bitset graphs, rooted graphs and the named families used throughout."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the neighbour bitset of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} references vertices >= n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # -- queries -------------------------------------------------------------
    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = frontier = seed
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def induced(self, mask: int) -> Graph:
        """Induced subgraph on the vertices of ``mask``, relabelled in order."""
        verts = list(_bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for w in _bits(self.adj[v] & mask):
                row |= 1 << index[w]
            rows.append(row)
        return Graph(len(verts), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << perm[w]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.adj[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def to_text(self) -> str:
        """Adjacency-list text: ``n m`` header then one ``u v`` line per edge."""
        lines = [f"{self.n} {self.m}"] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Graph:
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 2:
            raise GraphError("edge-list text must start with 'n m'")
        try:
            n, m = int(rows[0][0]), int(rows[0][1])
            edges = [(int(a), int(b)) for a, b in rows[1:]]
        except ValueError as exc:
            raise GraphError(f"malformed edge-list text: {exc}") from None
        if len(edges) != m:
            raise GraphError(f"header declares {m} edges, found {len(edges)}")
        g = cls.from_edges(n, edges)
        if g.m != m:
            raise GraphError("duplicate edges in edge-list text")
        return g


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} out of range for n={self.graph.n}")

    def minus_root(self) -> Graph:
        return delete_vertices(self.graph, {self.root})


Shape = Literal["starlike", "pathlike"]


@dataclass(frozen=True)
class RootedTreeSpec:
    """Root joined to ``k`` copies of K_{1,l} (at its centre) or P_{l+1} (at an end)."""

    shape: Shape
    l: int
    k: int

    def __post_init__(self):
        if self.shape not in ("starlike", "pathlike"):
            raise GraphError(f"unknown tree shape {self.shape!r}")
        if self.l < 0 or self.k < 0:
            raise GraphError("tree parameters must be nonnegative")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("invalid family parameter")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("invalid family parameter")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("invalid family parameter")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("invalid family parameter")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    if n < 0:
        raise GraphError("invalid family parameter")
    return Graph.from_edges(n + 1, [(0, j) for j in range(1, n + 1)])


def theta(a: int, b: int, c: int) -> Graph:
    """Vertices 0 and 1 joined by paths with a, b, c internal vertices."""
    if min(a, b, c) < 1:
        raise GraphError("invalid family parameter")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(a + b + c + 2, edges)


def make_named(kind: str, *params: int) -> Graph:
    builders = {
        "complete_bipartite": complete_bipartite,
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "star": star,
        "theta": theta,
        "empty": Graph.empty,
        "g8": lambda: g8(),
        "g11": lambda: g11(),
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}") from None
    try:
        return builder(*params)
    except TypeError:
        raise GraphError("invalid family parameter") from None


def g8() -> Graph:
    """K_{2,4} with one edge subdivided twice (8 vertices, 10 edges)."""
    return subdivide_edge(complete_bipartite(2, 4), (0, 2), 2)


def g11() -> Graph:
    """K_{3,3}; subdivide two edges at v=0 twice each, then hang a pendant on v."""
    g = complete_bipartite(3, 3)
    g = subdivide_edge(g, (0, 3), 2)
    g = subdivide_edge(g, (0, 4), 2)
    return add_pendant(g, 0)


_FAMILY_PATTERNS = [
    (re.compile(r"K_?\{?(\d+),(\d+)\}?"), "complete_bipartite"),
    (re.compile(r"(?:theta|Theta)_?[\(\{]?(\d+),(\d+),(\d+)[\)\}]?"), "theta"),
    (re.compile(r"P_?\{?(\d+)\}?"), "path"),
    (re.compile(r"C_?\{?(\d+)\}?"), "cycle"),
    (re.compile(r"K_?\{?(\d+)\}?"), "complete"),
    (re.compile(r"star\((\d+)\)"), "star"),
    (re.compile(r"empty\((\d+)\)"), "empty"),
    (re.compile(r"G_?\{?8\}?"), "g8"),
    (re.compile(r"G_?\{?11\}?"), "g11"),
]


def parse_family(text: str) -> Graph:
    """Parse names like ``K_{2,3}``, ``P_4``, ``C6``, ``theta(1,2,3)``, ``G_8``."""
    s = text.strip().replace(" ", "")
    for pattern, kind in _FAMILY_PATTERNS:
        m = pattern.fullmatch(s)
        if m:
            return make_named(kind, *(int(x) for x in m.groups()))
    raise GraphError(f"unknown family {text!r}")


def build_rooted_tree(spec: RootedTreeSpec) -> RootedGraph:
    """Root 0; copies are laid out one after another."""
    edges = []
    nxt = 1
    for _ in range(spec.k):
        head = nxt
        edges.append((0, head))
        nxt += 1
        if spec.shape == "starlike":
            for _ in range(spec.l):
                edges.append((head, nxt))
                nxt += 1
        else:
            prev = head
            for _ in range(spec.l):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return RootedGraph(Graph.from_edges(nxt, edges), 0)


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def subdivide_edge(g: Graph, edge: tuple[int, int], times: int) -> Graph:
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError("edge not present")
    if times < 0:
        raise GraphError("subdivision count must be nonnegative")
    if times == 0:
        return g
    edges = [e for e in g.edges() if set(e) != {u, v}]
    chain = [u] + list(range(g.n, g.n + times)) + [v]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + times, edges)


def add_pendant(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return Graph.from_edges(g.n + 1, g.edges() + [(v, g.n)])


def coalesce(g1: RootedGraph, g2: RootedGraph) -> RootedGraph:
    """Identify the two roots; g1 keeps its labels, g2's other vertices follow."""
    n1 = g1.graph.n
    mapping = {}
    nxt = n1
    for v in range(g2.graph.n):
        if v == g2.root:
            mapping[v] = g1.root
        else:
            mapping[v] = nxt
            nxt += 1
    edges = g1.graph.edges() + [(mapping[a], mapping[b]) for a, b in g2.graph.edges()]
    return RootedGraph(Graph.from_edges(nxt, edges), g1.root)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        mask |= 1 << v
    return g.induced(g.full_mask & ~mask)


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """BFS two-colouring; ``None`` when an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return ([v for v in range(g.n) if color[v] == 0],
            [v for v in range(g.n) if color[v] == 1])
