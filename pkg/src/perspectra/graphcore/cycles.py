"""Cycle and path enumeration, plus even-subdivision-of-K_{2,3} detection."""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .graph import Graph, GraphError, _bits

EVEN_SUBDIVISION_MAX_N = 16


def cycle_masks_through(adj: tuple[int, ...], u: int, allowed: int) -> Iterator[tuple[int, int]]:
    """Yield ``(vertex_mask, length)`` once per simple cycle through ``u``.

    Only vertices in ``allowed`` may be used (``u`` itself must be in it).
    Each cycle is walked in the orientation whose first step goes to the
    smaller neighbour of ``u``.
    """
    nbrs_u = adj[u] & allowed
    stack = []
    for s in _bits(nbrs_u):
        # closing neighbours must be larger than the starting one
        closers = nbrs_u & ~((2 << s) - 1)
        if not closers:
            continue
        stack.append((s, (1 << u) | (1 << s), 2))
        while stack:
            v, used, length = stack.pop()
            if length >= 3 and closers >> v & 1:
                yield used, length
            for w in _bits(adj[v] & allowed & ~used):
                stack.append((w, used | (1 << w), length + 1))


def _cycle_paths_through(g: Graph, u: int) -> Iterator[list[int]]:
    nbrs_u = g.adj[u]
    for s in _bits(nbrs_u):
        closers = nbrs_u & ~((2 << s) - 1)
        if not closers:
            continue
        stack = [[u, s]]
        used_stack = [(1 << u) | (1 << s)]
        while stack:
            walk = stack.pop()
            used = used_stack.pop()
            v = walk[-1]
            if len(walk) >= 3 and closers >> v & 1:
                yield walk
            for w in _bits(g.adj[v] & ~used):
                stack.append(walk + [w])
                used_stack.append(used | (1 << w))


def _canonical_cycle(walk: list[int]) -> list[int]:
    i = walk.index(min(walk))
    rot = walk[i:] + walk[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return rot


def cycles_through(g: Graph, u: int) -> list[list[int]]:
    """Every simple cycle (length >= 3) containing ``u``, each exactly once.

    Cycles start at their smallest vertex and continue towards the smaller
    of its two cycle neighbours.
    """
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return sorted((_canonical_cycle(w) for w in _cycle_paths_through(g, u)),
                  key=lambda c: (len(c), c))


class ThetaWitness(NamedTuple):
    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]


def _even_paths(g: Graph, u: int, v: int) -> dict[int, tuple[int, ...]]:
    """Simple u-v paths of even length >= 2, one per internal-vertex set."""
    found: dict[int, tuple[int, ...]] = {}
    stack = [(u, (u,), 1 << u)]
    while stack:
        x, walk, used = stack.pop()
        for w in _bits(g.adj[x] & ~used):
            if w == v:
                # walk has len(walk) vertices, so the path has len(walk) edges
                if len(walk) >= 2 and len(walk) % 2 == 0:
                    internal = used & ~(1 << u)
                    found.setdefault(internal, walk + (v,))
                continue
            stack.append((w, walk + (w,), used | (1 << w)))
    return found


def contains_even_subdivision_k23(g: Graph) -> ThetaWitness | None:
    """Find a theta subgraph whose three u-v paths all have even length.

    Brute force: enumerate even u-v paths per vertex pair, then search for
    three with pairwise disjoint interiors.
    """
    if g.n > EVEN_SUBDIVISION_MAX_N:
        raise GraphError("instance too large for brute force")
    deg = g.degrees()
    for u in range(g.n):
        if deg[u] < 3:
            continue
        for v in range(u + 1, g.n):
            if deg[v] < 3:
                continue
            paths = sorted(_even_paths(g, u, v).items(), key=lambda kv: (len(kv[1]), kv[1]))
            masks = [m for m, _ in paths]
            for i, a in enumerate(masks):
                for j in range(i + 1, len(masks)):
                    b = masks[j]
                    if a & b:
                        continue
                    ab = a | b
                    for k in range(j + 1, len(masks)):
                        if not masks[k] & ab:
                            return ThetaWitness(u, v, (paths[i][1], paths[j][1], paths[k][1]))
    return None
