"""Permanental polynomials per(xI - A(G)) by three independent engines.

* ``SACHS``: enumerate Sachs subgraphs (disjoint edges and cycles) and tally
  ``b_k = (-1)^k * sum 2^(#cycles)``.
* ``EXPANSION``: ``b_k = (-1)^k * sum over k-subsets S of per(A[S])`` using a
  Gray-code Ryser permanent.
* ``RECURSIVE``: vertex-deletion recursion over neighbours and cycles through
  a vertex, memoised on canonical forms of small components.

Closed forms for stars, paths, theta graphs and rooted trees live here too.
"""

from __future__ import annotations

import enum
from collections import OrderedDict, defaultdict
from math import comb
from typing import Sequence

from .graphcore import Graph, GraphError, RootedGraph, canonical_form, cycle_masks_through
from .graphcore.graph import _bits
from .polyexact import ONE, X, IntPoly

SACHS_MAX_N = 20
RECURSIVE_MAX_N = 20
EXPANSION_MAX_N = 14
PERMANENT_MAX_ORDER = 30

# Components up to this size are memoised by canonical form across calls.
CANON_MEMO_MAX_N = 8
CANON_MEMO_SIZE = 100_000


class EngineKind(enum.Enum):
    SACHS = "sachs"
    EXPANSION = "expansion"
    RECURSIVE = "recursive"


class CapExceeded(GraphError):
    """Input larger than an engine's configured size cap."""


ENGINE_CAPS = {
    EngineKind.SACHS: SACHS_MAX_N,
    EngineKind.EXPANSION: EXPANSION_MAX_N,
    EngineKind.RECURSIVE: RECURSIVE_MAX_N,
}


# ---------------------------------------------------------------------------
# permanent kernel
# ---------------------------------------------------------------------------

def permanent(m: Sequence[Sequence[int]]) -> int:
    """Ryser's formula with Gray-code column updates, O(2^n n)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("permanent requires a square matrix")
    if n > PERMANENT_MAX_ORDER:
        raise CapExceeded(f"permanent: order {n} exceeds cap {PERMANENT_MAX_ORDER}")
    if n == 0:
        return 1
    cols = [[m[i][j] for i in range(n)] for j in range(n)]
    rowsums = [0] * n
    total = 0
    size = 0
    gray = 0
    for g in range(1, 1 << n):
        j = (g & -g).bit_length() - 1
        gray ^= 1 << j
        col = cols[j]
        if gray >> j & 1:
            size += 1
            for i in range(n):
                rowsums[i] += col[i]
        else:
            size -= 1
            for i in range(n):
                rowsums[i] -= col[i]
        prod = 1
        for r in rowsums:
            if not r:
                prod = 0
                break
            prod *= r
        if prod:
            total += -prod if size & 1 else prod
    return -total if n & 1 else total


def _permanent_of_mask(g: Graph, mask: int) -> int:
    verts = list(_bits(mask))
    return permanent([[g.adj[u] >> v & 1 for v in verts] for u in verts])


# ---------------------------------------------------------------------------
# engines
# ---------------------------------------------------------------------------

def _check_cap(g: Graph, engine: EngineKind) -> None:
    cap = ENGINE_CAPS[engine]
    if g.n > cap:
        raise CapExceeded(f"{engine.value} engine: n={g.n} exceeds cap {cap}")


def _coeffs_to_poly(n: int, b: dict[int, int]) -> IntPoly:
    # b[k] is the coefficient of x^(n-k)
    return IntPoly(b.get(n - e, 0) for e in range(n + 1))


def _sachs(g: Graph) -> IntPoly:
    adj = g.adj
    memo: dict[int, dict[tuple[int, int], int]] = {0: {(0, 0): 1}}

    def tally(w: int) -> dict[tuple[int, int], int]:
        hit = memo.get(w)
        if hit is not None:
            return hit
        low = w & -w
        v = low.bit_length() - 1
        rest = w ^ low
        out: dict[tuple[int, int], int] = defaultdict(int)
        for key, cnt in tally(rest).items():
            out[key] += cnt
        for u in _bits(adj[v] & rest):
            for (k, c), cnt in tally(rest & ~(1 << u)).items():
                out[k + 2, c] += cnt
        for cmask, length in cycle_masks_through(adj, v, w):
            for (k, c), cnt in tally(w & ~cmask).items():
                out[k + length, c + 1] += cnt
        memo[w] = out = dict(out)
        return out

    b: dict[int, int] = defaultdict(int)
    for (k, c), cnt in tally(g.full_mask).items():
        b[k] += (-1) ** k * (cnt << c)
    return _coeffs_to_poly(g.n, b)


def _expansion(g: Graph) -> IntPoly:
    b: dict[int, int] = defaultdict(int)
    b[0] = 1
    comp_per: dict[int, int] = {}
    for s in range(1, 1 << g.n):
        # a vertex with no neighbour inside S zeroes its row
        if any(not (g.adj[v] & s) for v in _bits(s)):
            continue
        val = 1
        for comp in g.component_masks(s):
            p = comp_per.get(comp)
            if p is None:
                p = comp_per[comp] = _permanent_of_mask(g, comp)
            val *= p
            if not val:
                break
        if val:
            k = s.bit_count()
            b[k] += -val if k & 1 else val
    return _coeffs_to_poly(g.n, b)


_canon_memo: OrderedDict[bytes, IntPoly] = OrderedDict()


def _canon_get(key: bytes) -> IntPoly | None:
    hit = _canon_memo.get(key)
    if hit is not None:
        _canon_memo.move_to_end(key)
    return hit


def _canon_put(key: bytes, value: IntPoly) -> None:
    _canon_memo[key] = value
    if len(_canon_memo) > CANON_MEMO_SIZE:
        _canon_memo.popitem(last=False)


def _recursive(g: Graph) -> IntPoly:
    adj = g.adj
    by_mask: dict[int, IntPoly] = {0: ONE}

    def of_mask(mask: int) -> IntPoly:
        out = ONE
        for comp in g.component_masks(mask):
            out = out * connected(comp)
        return out

    def connected(comp: int) -> IntPoly:
        hit = by_mask.get(comp)
        if hit is not None:
            return hit
        size = comp.bit_count()
        key = None
        if size <= CANON_MEMO_MAX_N:
            key = canonical_form(g.induced(comp))
            hit = _canon_get(key)
            if hit is not None:
                by_mask[comp] = hit
                return hit
        if size == 1:
            res = X
        else:
            u = max(_bits(comp), key=lambda v: (adj[v] & comp).bit_count())
            rest = comp & ~(1 << u)
            res = X * of_mask(rest)
            for v in _bits(adj[u] & comp):
                res = res + of_mask(rest & ~(1 << v))
            for cmask, length in cycle_masks_through(adj, u, comp):
                term = of_mask(comp & ~cmask)
                res = res + term.scale(-2 if length & 1 else 2)
        by_mask[comp] = res
        if key is not None:
            _canon_put(key, res)
        return res

    return of_mask(g.full_mask)


_ENGINES = {
    EngineKind.SACHS: _sachs,
    EngineKind.EXPANSION: _expansion,
    EngineKind.RECURSIVE: _recursive,
}


def per_poly(g: Graph, engine: EngineKind | str = EngineKind.SACHS) -> IntPoly:
    """The permanental polynomial of ``g`` with exact integer coefficients."""
    engine = EngineKind(engine)
    _check_cap(g, engine)
    return _ENGINES[engine](g)


def engines_within_caps(g: Graph) -> list[EngineKind]:
    return [e for e in EngineKind if g.n <= ENGINE_CAPS[e]]


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def star_poly(n: int) -> IntPoly:
    """pi(K_{1,n}) = x^(n-1) (x^2 + n); K_{1,0} is K_1."""
    if n < 0:
        raise ValueError("negative star size")
    if n == 0:
        return X
    return IntPoly([n, 0, 1]).shift(n - 1)


def path_poly(n: int) -> IntPoly:
    """pi(P_n) = sum_m C(n-m, n-2m) x^(n-2m), with pi(P_0) = 1."""
    if n < 0:
        raise ValueError("negative path length")
    coeffs = [0] * (n + 1)
    for m in range(n // 2 + 1):
        coeffs[n - 2 * m] = comb(n - m, n - 2 * m)
    return IntPoly(coeffs)


def _spider_poly(lengths: Sequence[int]) -> IntPoly:
    """Tree of a centre with pendant paths of the given vertex counts."""
    paths = [path_poly(a) for a in lengths]
    prod = ONE
    for p in paths:
        prod = prod * p
    total = X * prod
    for i, a in enumerate(lengths):
        if a == 0:
            continue
        term = path_poly(a - 1)
        for j, p in enumerate(paths):
            if j != i:
                term = term * p
        total = total + term
    return total


def theta_poly(a: int, b: int, c: int) -> IntPoly:
    """Expand the deletion recursion at one of the two degree-3 vertices."""
    if min(a, b, c) < 1:
        raise ValueError("theta parameters must be >= 1")
    lengths = (a, b, c)
    res = X * _spider_poly(lengths)
    for i in range(3):
        shorter = list(lengths)
        shorter[i] -= 1
        res = res + _spider_poly(shorter)
    for i in range(3):
        for j in range(i + 1, 3):
            k = 3 - i - j
            sign = -1 if (lengths[i] + lengths[j]) % 2 else 1
            res = res + path_poly(lengths[k]).scale(2 * sign)
    return res


def per_poly_rooted_tree(t: RootedGraph) -> IntPoly:
    """Rooted-tree recursion, memoised on the shape of each rooted subtree."""
    g = t.graph
    if not g.is_tree():
        raise GraphError("not a tree")
    memo: dict[str, tuple[IntPoly, IntPoly]] = {}

    # iterative post-order so deep paths do not hit the recursion limit
    parent = {t.root: -1}
    order = [t.root]
    for v in order:
        for w in _bits(g.adj[v]):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    shape: dict[int, str] = {}
    polys: dict[int, tuple[IntPoly, IntPoly]] = {}
    for v in reversed(order):
        kids = [w for w in _bits(g.adj[v]) if w != parent[v]]
        key = "(" + "".join(sorted(shape[w] for w in kids)) + ")"
        shape[v] = key
        hit = memo.get(key)
        if hit is None:
            kid_polys = [polys[w] for w in kids]
            minus_root = ONE
            for full, _ in kid_polys:
                minus_root = minus_root * full
            full = X * minus_root
            for i, (_, kid_minus) in enumerate(kid_polys):
                term = kid_minus
                for j, (other, _) in enumerate(kid_polys):
                    if j != i:
                        term = term * other
                full = full + term
            hit = memo[key] = (full, minus_root)
        polys[v] = hit
    return polys[t.root][0]
