"""Census of connected bipartite graphs: membership and even K_{2,3} subdivisions."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphcore import (
    Graph,
    canonical_form,
    contains_even_subdivision_k23,
    enumerate_connected_bipartite,
    graph6_encode,
    is_bipartite,
)
from .graphcore.canon import CANONICAL_MAX_N
from .permpoly import EngineKind, per_poly
from .polyexact import format_poly
from .spectra import classify_perspec

CSV_HEADER = "graph6,n,in_G,bipartite,has_even_subdiv_k23,perpoly"
PARALLEL_THRESHOLD = 200


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    in_G: bool
    bipartite: bool
    has_even_subdiv_k23: bool
    perpoly: str

    def csv_row(self) -> str:
        return ",".join([
            self.graph6, str(self.n), _b(self.in_G), _b(self.bipartite),
            _b(self.has_even_subdiv_k23), self.perpoly,
        ])


@dataclass(frozen=True)
class CensusSummary:
    total: int
    in_G: int
    in_G_with_even_subdiv_k23: int

    def line(self) -> str:
        return (f"total={self.total} in_G={self.in_G} "
                f"in_G_with_even_subdiv_k23={self.in_G_with_even_subdiv_k23}")


def _b(v: bool) -> str:
    return "true" if v else "false"


def worker_count() -> int:
    """``PERSPECTRA_THREADS`` caps parallelism; 0 or unset means one per CPU."""
    raw = os.environ.get("PERSPECTRA_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("PERSPECTRA_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def census_record(g: Graph) -> CensusRecord:
    p = per_poly(g, EngineKind.SACHS)
    return CensusRecord(
        graph6=graph6_encode(g),
        n=g.n,
        in_G=classify_perspec(p).is_purely_imaginary,
        bipartite=is_bipartite(g) is not None,
        has_even_subdiv_k23=contains_even_subdivision_k23(g) is not None,
        perpoly=format_poly(p),
    )


def filter_stream(graphs: Iterable[Graph], n: int | None) -> Iterator[Graph]:
    """Keep connected bipartite graphs (on ``n`` vertices), one per class."""
    seen: set[bytes] = set()
    for g in graphs:
        if n is not None and g.n != n:
            continue
        if not g.is_connected() or is_bipartite(g) is None:
            continue
        if g.n <= CANONICAL_MAX_N:
            form = canonical_form(g)
            if form in seen:
                continue
            seen.add(form)
        yield g


def run_census(n: int | None = None, graphs: Iterable[Graph] | None = None,
               workers: int | None = None) -> list[CensusRecord]:
    """Records in generation (or stream) order."""
    source = list(enumerate_connected_bipartite(n) if graphs is None else filter_stream(graphs, n))
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(source) >= PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(census_record, source, chunksize=32))
    return [census_record(g) for g in source]


def summarize(records: Iterable[CensusRecord]) -> CensusSummary:
    records = list(records)
    return CensusSummary(
        total=len(records),
        in_G=sum(r.in_G for r in records),
        in_G_with_even_subdiv_k23=sum(r.in_G and r.has_even_subdiv_k23 for r in records),
    )


def to_csv(records: Iterable[CensusRecord]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"
