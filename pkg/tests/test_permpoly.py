from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from perspectra.graphcore import (
    Graph,
    GraphError,
    RootedGraph,
    RootedTreeSpec,
    build_rooted_tree,
    complete,
    complete_bipartite,
    cycle,
    g8,
    is_bipartite,
    path,
    star,
    theta,
)
from perspectra.permpoly import (
    EXPANSION_MAX_N,
    SACHS_MAX_N,
    CapExceeded,
    EngineKind,
    engines_within_caps,
    path_poly,
    per_poly,
    per_poly_rooted_tree,
    permanent,
    star_poly,
    theta_poly,
)
from perspectra.polyexact import X, IntPoly, evaluate, parse_poly

ENGINES = list(EngineKind)


def naive_permanent(m):
    n = len(m)
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= m[i][sigma[i]]
            if not prod:
                break
        total += prod
    return total


def brute_per_poly(g: Graph) -> IntPoly:
    """per(xI - A) summed permutation by permutation."""
    coeffs = [0] * (g.n + 1)
    for sigma in permutations(range(g.n)):
        fixed = 0
        for i, j in enumerate(sigma):
            if i == j:
                fixed += 1
            elif not g.has_edge(i, j):
                break
        else:
            coeffs[fixed] += (-1) ** (g.n - fixed)
    return IntPoly(coeffs)


def matching_counts(g: Graph) -> list[int]:
    edges = g.edges()
    counts = [0] * (g.n // 2 + 1)
    for r in range(len(counts)):
        for sub in combinations(edges, r):
            verts = {v for e in sub for v in e}
            if len(verts) == 2 * r:
                counts[r] += 1
    return counts


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


# -- permanent ---------------------------------------------------------------

def test_permanent_examples():
    assert permanent([[1] * 3] * 3) == 6
    assert permanent(cycle(4).adjacency_matrix()) == 4
    assert permanent([[int(i == j) for j in range(5)] for i in range(5)]) == 1
    assert permanent([]) == 1
    with pytest.raises(ValueError, match="square"):
        permanent([[1, 0], [1]])


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_permanent_matches_permutation_sum(m):
    assert permanent(m) == naive_permanent(m)


# -- engines -----------------------------------------------------------------

@pytest.mark.parametrize("engine", ENGINES)
@pytest.mark.parametrize("g, expected", [
    (complete_bipartite(2, 3), "x^5+6*x^3+12*x"),
    (complete_bipartite(3, 3), "x^6+9*x^4+36*x^2+36"),
    (Graph.empty(4), "x^4"),
    (Graph.empty(0), "1"),
    (g8(), "x^8+10*x^6+33*x^4+36*x^2"),
    (cycle(4), "x^4+4*x^2+4"),
])
def test_engine_examples(engine, g, expected):
    assert per_poly(g, engine) == parse_poly(expected)


@pytest.mark.parametrize("engine", ENGINES)
def test_engines_match_brute_force_on_small_named_graphs(engine):
    for g in [cycle(5), complete(5), theta(1, 2, 3), path(6), star(5)]:
        assert per_poly(g, engine) == brute_per_poly(g)


def test_engines_accept_names():
    g = cycle(5)
    assert per_poly(g, "recursive") == per_poly(g, EngineKind.SACHS) == parse_poly("x^5+5*x^3+5*x-2")


@settings(max_examples=50, deadline=None, derandomize=True)
@given(st.integers(0, 7), st.randoms(use_true_random=False))
def test_engines_match_brute_force_on_random_graphs(n, rng):
    g = random_graph(rng, n, rng.random())
    expected = brute_per_poly(g)
    for engine in ENGINES:
        assert per_poly(g, engine) == expected


def test_engines_agree_on_census_graphs(census_graphs):
    for graphs in census_graphs.values():
        for g in graphs:
            polys = {per_poly(g, e) for e in ENGINES}
            assert len(polys) == 1, g.to_text()


def test_engines_agree_on_disconnected_and_larger_graphs():
    rng = random.Random(7)
    for _ in range(10):
        g = random_graph(rng, 12, 0.25)
        assert len({per_poly(g, e) for e in ENGINES}) == 1


def test_constant_term_is_signed_permanent():
    rng = random.Random(1234)
    for _ in range(40):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.random())
        assert evaluate(per_poly(g), 0) == (-1) ** n * permanent(g.adjacency_matrix())


def test_bipartite_iff_odd_coefficients_vanish(census_graphs):
    rng = random.Random(99)
    graphs = [g for gs in census_graphs.values() for g in gs]
    graphs += [random_graph(rng, rng.randint(2, 9), 0.4) for _ in range(60)]
    for g in graphs:
        p = per_poly(g)
        # b_k is the coefficient of x^(n-k)
        odd_zero = all(p[g.n - k] == 0 for k in range(1, g.n + 1, 2))
        assert odd_zero == (is_bipartite(g) is not None)


def test_bipartite_even_coefficients_nonnegative(census_graphs):
    for graphs in census_graphs.values():
        for g in graphs:
            p = per_poly(g)
            assert all(p[g.n - k] >= 0 for k in range(0, g.n + 1, 2))


def test_tree_coefficients_count_matchings():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 10)
        t = random_tree(rng, n)
        p = per_poly(t)
        for m, count in enumerate(matching_counts(t)):
            assert p[n - 2 * m] == count


def test_cap_errors():
    big = Graph.empty(SACHS_MAX_N + 1)
    with pytest.raises(CapExceeded, match="sachs engine: n=21 exceeds cap 20"):
        per_poly(big, EngineKind.SACHS)
    with pytest.raises(CapExceeded, match="expansion engine"):
        per_poly(Graph.empty(EXPANSION_MAX_N + 1), EngineKind.EXPANSION)
    assert engines_within_caps(Graph.empty(EXPANSION_MAX_N + 1)) == [EngineKind.SACHS, EngineKind.RECURSIVE]
    assert isinstance(CapExceeded("x"), GraphError)


# -- closed forms ------------------------------------------------------------

def test_star_and_path_examples():
    assert path_poly(4) == parse_poly("x^4+3*x^2+1")
    assert path_poly(0) == IntPoly([1])
    assert path_poly(1) == X
    assert star_poly(4) == parse_poly("x^5+4*x^3")
    assert star_poly(0) == X
    with pytest.raises(ValueError):
        path_poly(-1)
    with pytest.raises(ValueError):
        star_poly(-2)


def test_closed_forms_match_engines():
    for n in range(1, 12):
        assert path_poly(n) == per_poly(path(n))
        assert star_poly(n - 1) == per_poly(star(n - 1))
    for n in range(2, 15):
        assert path_poly(n) == X * path_poly(n - 1) + path_poly(n - 2)


def test_theta_poly():
    assert theta_poly(1, 1, 1) == parse_poly("x^5+6*x^3+12*x")
    assert theta_poly(3, 1, 1) == per_poly(theta(3, 1, 1), EngineKind.EXPANSION)
    assert theta_poly(1, 2, 3) == per_poly(theta(1, 2, 3), EngineKind.RECURSIVE)
    for a in range(1, 5):
        for b in range(a, 5):
            for c in range(b, 5):
                assert theta_poly(a, b, c) == per_poly(theta(a, b, c)), (a, b, c)
    with pytest.raises(ValueError):
        theta_poly(0, 1, 1)


def test_rooted_tree_recursion():
    for n in range(6):
        assert per_poly_rooted_tree(RootedGraph(star(n), 0)) == star_poly(n)
    assert per_poly_rooted_tree(RootedGraph(Graph.empty(1), 0)) == X
    fig_tree = build_rooted_tree(RootedTreeSpec("pathlike", 4, 3))
    assert per_poly_rooted_tree(fig_tree) == per_poly(fig_tree.graph)
    deep = RootedGraph(path(64), 0)
    assert per_poly_rooted_tree(deep) == path_poly(64)
    with pytest.raises(GraphError, match="not a tree"):
        per_poly_rooted_tree(RootedGraph(cycle(4), 0))


def test_rooted_tree_recursion_random():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 16)
        t = random_tree(rng, n)
        assert per_poly_rooted_tree(RootedGraph(t, rng.randrange(n))) == per_poly(t)
