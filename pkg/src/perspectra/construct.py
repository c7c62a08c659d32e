"""Coalescence of a rooted host graph with a uniform rooted tree.

For a host ``(G1, r1)`` and a tree made of ``k`` copies of ``(T', u')`` hung
from one root,

    pi(G1 . T) = pi(T')^(k-1) * H,   H = pi(G1) pi(T') + k pi(G1 - r1) pi(T' - u'),

so membership of the coalescence reduces to the roots of ``H``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

from .graphcore import (
    Graph,
    GraphError,
    RootedGraph,
    RootedTreeSpec,
    build_rooted_tree,
    coalesce,
    complete_bipartite,
    parse_family,
    theta,
)
from .permpoly import EngineKind, path_poly, per_poly, star_poly
from .polyexact import X, IntPoly
from .spectra import classify_perspec

HostKind = Literal["K23deg3", "K23deg2", "K33"]

# K_{3,3} is vertex-transitive, so vertex 0 stands for every root.
HOSTS: dict[str, tuple[Graph, int]] = {
    "K23deg3": (complete_bipartite(2, 3), 0),
    "K23deg2": (complete_bipartite(2, 3), 2),
    "K33": (complete_bipartite(3, 3), 0),
}

FAMILIES = tuple(f"{h}x{s}" for h in HOSTS for s in ("Starlike", "Pathlike"))

DEFAULT_L_MAX = 10
DEFAULT_K_MAX = 30


def host_graph(name: str) -> RootedGraph:
    """``K23deg3``, ``K23deg2``, ``K33``, or ``<family>@<root>`` e.g. ``theta(3,1,1)@0``."""
    if name in HOSTS:
        g, r = HOSTS[name]
        return RootedGraph(g, r)
    m = re.fullmatch(r"(.+)@(\d+)", name.strip())
    if m:
        return RootedGraph(parse_family(m.group(1)), int(m.group(2)))
    raise GraphError(f"unknown host {name!r}")


@lru_cache(maxsize=4096)
def _pi(g: Graph) -> IntPoly:
    return per_poly(g, EngineKind.SACHS)


def schwenk_coalescence_poly(g1: RootedGraph, g2: RootedGraph) -> IntPoly:
    """pi(G1 . G2) from the polynomials of the parts and the parts minus roots."""
    p1, p2 = _pi(g1.graph), _pi(g2.graph)
    q1, q2 = _pi(g1.minus_root()), _pi(g2.minus_root())
    return p1 * q2 + q1 * p2 - X * q1 * q2


def branch_polys(spec: RootedTreeSpec) -> tuple[IntPoly, IntPoly]:
    """(pi(T'), pi(T' - u')) for one branch of the tree."""
    if spec.shape == "starlike":
        return star_poly(spec.l), X ** spec.l
    return path_poly(spec.l + 1), path_poly(spec.l)


def h_poly(g1: RootedGraph, spec: RootedTreeSpec) -> IntPoly:
    branch, branch_minus = branch_polys(spec)
    return _pi(g1.graph) * branch + _pi(g1.minus_root()) * branch_minus * spec.k


def verify_factorization(g1: RootedGraph, spec: RootedTreeSpec) -> bool:
    """Check pi(G1 . T) == pi(T')^(k-1) * H by direct computation.

    With k = 0 the tree is a bare root and the identity reads
    pi(G1) * pi(T') == H.
    """
    combined = coalesce(g1, build_rooted_tree(spec)).graph
    lhs = per_poly(combined, EngineKind.SACHS)
    branch, _ = branch_polys(spec)
    h = h_poly(g1, spec)
    if spec.k == 0:
        return lhs * branch == h
    return lhs == branch ** (spec.k - 1) * h


def thm_predicate(root_kind: str, l: int, k: int) -> bool:
    """Closed-form membership conditions for K_{2,3} hosts with starlike trees."""
    if l < 0 or k < 0:
        raise ValueError("l and k must be nonnegative")
    if root_kind == "K23deg3":
        return (l <= 3 and l + k >= 4) or (l >= 4 and k >= 2 * l - 4)
    if root_kind == "K23deg2":
        return l + k >= 4 and l <= 2
    raise ValueError(f"no predicate for host {root_kind!r}")


def starlike_cubic(root_kind: str, l: int, k: int) -> IntPoly:
    """q(y) = -p(i sqrt(y)) for the sextic factor p of H with a K_{2,3} host."""
    if root_kind == "K23deg3":
        return IntPoly([-12 * l, 6 * l + 3 * k + 12, -(l + k + 6), 1])
    if root_kind == "K23deg2":
        return IntPoly([-(12 * l + 4 * k), 6 * l + 4 * k + 12, -(l + k + 6), 1])
    raise ValueError(f"no cubic for host {root_kind!r}")


def parse_family_name(family: str) -> tuple[str, str]:
    s = family.replace("×", "x").replace(" ", "")
    for host in HOSTS:
        for shape in ("Starlike", "Pathlike"):
            if s.lower() == f"{host}x{shape}".lower():
                return host, shape.lower()
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


@dataclass
class ScanGrid:
    family: str
    l_max: int
    k_max: int
    cells: dict[tuple[int, int], bool] = field(default_factory=dict)

    def true_cells(self) -> list[tuple[int, int]]:
        return [lk for lk, v in self.cells.items() if v]

    def to_csv(self) -> str:
        lines = ["family,l,k,in_G"]
        for l in range(self.l_max + 1):
            for k in range(self.k_max + 1):
                lines.append(f"{self.family},{l},{k},{str(self.cells[l, k]).lower()}")
        return "\n".join(lines) + "\n"

    def to_svg(self, pitch: int = 20) -> str:
        margin = 2 * pitch
        width = margin + (self.l_max + 1) * pitch + pitch
        height = margin + (self.k_max + 1) * pitch + pitch
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<text x="{width // 2}" y="{height - 4}" font-size="12" text-anchor="middle">l</text>',
            f'<text x="10" y="{height // 2}" font-size="12">k</text>',
            f'<text x="{width // 2}" y="14" font-size="12" text-anchor="middle">{self.family}</text>',
        ]
        for l in range(self.l_max + 1):
            cx = margin + l * pitch
            out.append(f'<text x="{cx}" y="{height - pitch}" font-size="9" text-anchor="middle">{l}</text>')
        for k in range(self.k_max + 1):
            cy = height - margin - k * pitch
            out.append(f'<text x="{margin - pitch}" y="{cy + 3}" font-size="9" text-anchor="end">{k}</text>')
        for l in range(self.l_max + 1):
            for k in range(self.k_max + 1):
                cx = margin + l * pitch
                cy = height - margin - k * pitch
                if self.cells[l, k]:
                    out.append(f'<circle cx="{cx}" cy="{cy}" r="{pitch // 3}" fill="black"/>')
                else:
                    out.append(f'<circle cx="{cx}" cy="{cy}" r="{pitch // 8}" fill="none" stroke="#bbb"/>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def scan_cell(host: RootedGraph, shape: str, l: int, k: int) -> bool:
    return classify_perspec(h_poly(host, RootedTreeSpec(shape, l, k))).is_purely_imaginary


def scan(family: str, l_max: int = DEFAULT_L_MAX, k_max: int = DEFAULT_K_MAX) -> ScanGrid:
    """Exact membership for every cell (l, k) with l <= l_max, k <= k_max."""
    if l_max < 0 or k_max < 0:
        raise ValueError("scan bounds must be nonnegative")
    host_name, shape = parse_family_name(family)
    host = host_graph(host_name)
    grid = ScanGrid(f"{host_name}x{shape.capitalize()}", l_max, k_max)
    for l in range(l_max + 1):
        for k in range(k_max + 1):
            grid.cells[l, k] = scan_cell(host, shape, l, k)
    return grid


def theta_host(a: int, b: int, c: int, root: int) -> RootedGraph:
    return RootedGraph(theta(a, b, c), root)
