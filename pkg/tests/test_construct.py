from __future__ import annotations

import pytest

from perspectra.construct import (
    FAMILIES,
    HOSTS,
    h_poly,
    host_graph,
    parse_family_name,
    scan,
    scan_cell,
    schwenk_coalescence_poly,
    starlike_cubic,
    thm_predicate,
    verify_factorization,
)
from perspectra.graphcore import (
    Graph,
    GraphError,
    RootedGraph,
    RootedTreeSpec,
    build_rooted_tree,
    coalesce,
    path,
    star,
)
from perspectra.permpoly import path_poly, per_poly
from perspectra.polyexact import X, IntPoly, cubic_discriminant, parse_poly
from perspectra.spectra import classify_perspec, is_in_G

K23_DEG3 = host_graph("K23deg3")
K23_DEG2 = host_graph("K23deg2")
K33 = host_graph("K33")


def starlike(l, k):
    return RootedTreeSpec("starlike", l, k)


def pathlike(l, k):
    return RootedTreeSpec("pathlike", l, k)


def test_hosts():
    assert K23_DEG3.graph.degree(K23_DEG3.root) == 3
    assert K23_DEG2.graph.degree(K23_DEG2.root) == 2
    assert K33.graph.degree(K33.root) == 3
    assert host_graph("C_6@2") == RootedGraph(Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]), 2)
    with pytest.raises(GraphError):
        host_graph("nope")


# -- Schwenk -----------------------------------------------------------------

def test_schwenk_examples():
    k1 = RootedGraph(Graph.empty(1), 0)
    g = RootedGraph(path(4), 1)
    assert schwenk_coalescence_poly(k1, g) == per_poly(g.graph)
    p2 = RootedGraph(path(2), 0)
    assert schwenk_coalescence_poly(p2, p2) == parse_poly("x^3+2*x") == path_poly(3)
    k14 = RootedGraph(star(4), 0)
    combined = coalesce(K23_DEG3, k14)
    assert combined.graph.n == 9
    assert schwenk_coalescence_poly(K23_DEG3, k14) == per_poly(combined.graph)


# -- H polynomial ------------------------------------------------------------

@pytest.mark.parametrize("l", range(0, 7))
@pytest.mark.parametrize("k", range(0, 9))
def test_h_poly_closed_forms(l, k):
    xl = X ** l
    assert h_poly(K23_DEG3, starlike(l, k)) == xl * IntPoly(
        [12 * l, 0, 6 * l + 3 * k + 12, 0, l + k + 6, 0, 1])
    assert h_poly(K23_DEG2, starlike(l, k)) == xl * IntPoly(
        [12 * l + 4 * k, 0, 6 * l + 4 * k + 12, 0, l + k + 6, 0, 1])
    # K33 closed form carries x^(l-1); multiply through by x to stay integral at l = 0
    lhs = X * h_poly(K33, starlike(l, k))
    assert lhs == xl * IntPoly([36 * l, 0, 12 * k + 36 * l + 36, 0, 6 * k + 9 * l + 36, 0, k + l + 9, 0, 1])


def test_h_poly_zero_four_case():
    h = h_poly(K23_DEG3, starlike(0, 4))
    assert h == parse_poly("x^6+10*x^4+24*x^2")
    assert h == X ** 2 * parse_poly("x^2+4") * parse_poly("x^2+6")
    assert classify_perspec(h).is_purely_imaginary


def test_starlike_cubic_is_reduced_h():
    for host, name in ((K23_DEG3, "K23deg3"), (K23_DEG2, "K23deg2")):
        for l in range(5):
            for k in range(5):
                sextic = IntPoly(h_poly(host, starlike(l, k)).coeffs[l:])
                q = sextic.decompose_x2().negate_var()
                assert q == -starlike_cubic(name, l, k)


def test_verify_factorization_examples():
    assert verify_factorization(K23_DEG3, starlike(2, 3))
    assert verify_factorization(K33, pathlike(1, 5))
    for spec in (starlike(3, 1), pathlike(4, 1), starlike(0, 1)):
        assert verify_factorization(K23_DEG2, spec)
    assert verify_factorization(K23_DEG3, starlike(2, 0))


def test_factorization_detects_wrong_h(monkeypatch):
    import perspectra.construct as c
    monkeypatch.setattr(c, "h_poly", lambda g1, spec: IntPoly([1]))
    assert not c.verify_factorization(K23_DEG3, starlike(1, 2))


# -- predicates and scans ----------------------------------------------------

def test_thm_predicate_examples():
    assert thm_predicate("K23deg3", 0, 4)
    assert not thm_predicate("K23deg3", 3, 0)
    assert not thm_predicate("K23deg2", 3, 10)
    assert thm_predicate("K23deg3", 6, 8) and not thm_predicate("K23deg3", 6, 7)
    with pytest.raises(ValueError):
        thm_predicate("K33", 1, 1)
    with pytest.raises(ValueError):
        thm_predicate("K23deg3", -1, 1)


def test_scan_examples():
    g = scan("K23deg3xStarlike", 1, 4)
    assert g.cells[0, 4] and not g.cells[0, 3]
    assert scan("K23deg3xPathlike", 7, 13).cells[7, 13]
    k33 = scan("K33xStarlike", 1, 7)
    assert k33.cells[1, 5] and k33.cells[0, 6] and k33.cells[0, 7]
    single = scan("K33xPathlike", 0, 0)
    assert list(single.cells) == [(0, 0)]
    assert single.to_csv() == "family,l,k,in_G\nK33xPathlike,0,0,false\n"


def test_scan_bad_input():
    with pytest.raises(ValueError, match="unknown family"):
        scan("K44xStarlike", 1, 1)
    with pytest.raises(ValueError):
        scan("K33xStarlike", -1, 1)


def test_family_names():
    assert parse_family_name("K23deg3×Starlike") == ("K23deg3", "starlike")
    assert parse_family_name("k33xpathlike") == ("K33", "pathlike")
    assert len(FAMILIES) == 6 and set(HOSTS) == {"K23deg3", "K23deg2", "K33"}


def test_grids_agree_for_small_l():
    for host in HOSTS:
        s = scan(f"{host}xStarlike", 1, 12)
        p = scan(f"{host}xPathlike", 1, 12)
        assert s.cells == p.cells


def test_discriminant_matches_scan():
    grid = scan("K23deg3xStarlike", 8, 20)
    for (l, k), cell in grid.cells.items():
        q = starlike_cubic("K23deg3", l, k)
        d = cubic_discriminant(*reversed(q.coeffs))
        assert (d >= 0) == cell, (l, k)


@pytest.mark.parametrize("family", FAMILIES)
def test_coalescence_membership_matches_h(family):
    host_name, shape = parse_family_name(family)
    host = host_graph(host_name)
    for l in range(5):
        for k in range(7):
            spec = RootedTreeSpec(shape, l, k)
            combined = coalesce(host, build_rooted_tree(spec)).graph
            if combined.n > 20:
                continue
            assert is_in_G(combined).is_purely_imaginary == scan_cell(host, shape, l, k), (family, l, k)


def test_scan_exports_are_deterministic():
    a, b = scan("K23deg2xPathlike", 4, 6), scan("K23deg2xPathlike", 4, 6)
    assert a.to_csv() == b.to_csv()
    assert a.to_svg() == b.to_svg()
    lines = a.to_csv().splitlines()
    assert lines[0] == "family,l,k,in_G" and len(lines) == 1 + 5 * 7
    assert lines[1].startswith("K23deg2xPathlike,0,0,") and lines[8].startswith("K23deg2xPathlike,1,0,")
    svg = a.to_svg()
    assert svg.startswith("<svg") and svg.count('fill="black"') == len(a.true_cells())
