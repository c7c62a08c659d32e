"""Exact classification of per-spectra.

A polynomial has purely imaginary roots (zero included) iff it is even after
removing ``x^m`` and ``q(y) = r(-y)`` has only nonnegative real roots, where
``r(x^2)`` is the even part.  Everything here is integer arithmetic; numeric
roots are attached for display only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Graph
from .permpoly import EngineKind, per_poly
from .polyexact import (
    NEG_INF,
    POS_INF,
    IntPoly,
    PolyError,
    RootCountCertificate,
    all_roots_real_nonneg,
    roots_numeric,
    squarefree_decompose,
    sturm_chain,
    sturm_count,
)


@dataclass(frozen=True)
class PerSpecReport:
    poly: IntPoly
    zero_multiplicity: int
    is_purely_imaginary: bool
    y_certificate: RootCountCertificate | None
    numeric_roots: tuple[complex, ...] | None
    is_bipartite_by_coeffs: bool


def odd_coefficients_vanish(p: IntPoly) -> bool:
    """True when b_k = 0 for every odd k, i.e. p is an even or odd polynomial."""
    return p.is_even() or p.is_odd()


def classify_perspec(p: IntPoly, numeric: bool = False) -> PerSpecReport:
    if p.is_zero():
        raise PolyError("zero input")
    m, rest = p.strip_x()
    bip = odd_coefficients_vanish(p)
    cert = None
    if not rest.is_even():
        purely = False
    else:
        q = rest.decompose_x2().negate_var()
        purely, cert = all_roots_real_nonneg(q)
    roots = tuple(roots_numeric(p)) if numeric else None
    return PerSpecReport(p, m, purely, cert, roots, bip)


def is_in_G(g: Graph, numeric: bool = False) -> PerSpecReport:
    return classify_perspec(per_poly(g, EngineKind.SACHS), numeric=numeric)


@dataclass(frozen=True)
class RootStructure:
    no_negative_root: bool
    no_nonzero_real_root: bool
    axis_symmetric: bool


def real_root_counts(p: IntPoly) -> tuple[int, int, int]:
    """(negative, zero, positive) real-root counts with multiplicity."""
    if p.is_zero():
        raise PolyError("zero input")
    m, rest = p.strip_x()
    neg = pos = 0
    for f, mult in squarefree_decompose(rest):
        chain = sturm_chain(f)
        neg += mult * sturm_count(f, NEG_INF, 0, chain=chain)
        pos += mult * sturm_count(f, 0, POS_INF, chain=chain)
    return neg, m, pos


def verify_root_structure(p: IntPoly) -> RootStructure:
    """Sturm checks: no negative root; no real root but 0; even/odd symmetry."""
    neg, _, pos = real_root_counts(p)
    return RootStructure(neg == 0, neg == 0 and pos == 0, odd_coefficients_vanish(p))
