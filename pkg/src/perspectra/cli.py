"""``perspectra`` command line.

Exit codes: 0 ok, 1 usage, 2 bad input, 3 size cap exceeded, 4 output not
writable, 5 engines disagree.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import census as census_mod
from .construct import (
    DEFAULT_K_MAX,
    DEFAULT_L_MAX,
    HOSTS,
    branch_polys,
    h_poly,
    host_graph,
    scan,
    schwenk_coalescence_poly,
    verify_factorization,
)
from .graphcore import (
    Graph,
    GraphError,
    RootedGraph,
    RootedTreeSpec,
    build_rooted_tree,
    coalesce,
    graph6_decode,
    graph6_encode,
    parse_family,
    read_graph6_stream,
)
from .graphcore.canon import CENSUS_MAX_N
from .permpoly import CapExceeded, EngineKind, engines_within_caps, per_poly
from .polyexact import PolyError, format_poly
from .spectra import classify_perspec

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_OUTPUT = 4
EXIT_DISAGREE = 5


class UsageError(Exception):
    pass


class OutputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _b(v: bool) -> str:
    return "true" if v else "false"


def format_root(z: complex, full_precision: bool = False) -> str:
    if full_precision:
        return f"{z.real!r}{z.imag:+.17g}i"
    re_, im = round(z.real, 2) + 0.0, round(z.imag, 2) + 0.0
    return f"{re_:.2f}{im:+.2f}i"


def _graph_from_args(args) -> Graph:
    sources = [s for s in (args.family, args.graph6, args.edges) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --graph6, --edges")
    if args.family is not None:
        return parse_family(args.family)
    if args.graph6 is not None:
        return graph6_decode(args.graph6)
    try:
        text = Path(args.edges).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {args.edges}: {exc}") from None
    return Graph.from_text(text)


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from None


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_poly(args) -> int:
    g = _graph_from_args(args)
    p = per_poly(g, EngineKind(args.engine))
    print(format_poly(p))
    if args.verify:
        results = {e: per_poly(g, e) for e in engines_within_caps(g)}
        agree = all(q == p for q in results.values())
        names = " ".join(f"{e.value}={'ok' if q == p else 'MISMATCH'}" for e, q in results.items())
        print(f"verify: {names} agree={_b(agree)}")
        if not agree:
            return EXIT_DISAGREE
    return 0


def cmd_classify(args) -> int:
    g = _graph_from_args(args)
    rep = classify_perspec(per_poly(g, EngineKind.SACHS), numeric=True)
    roots = ";".join(format_root(z, args.full_precision) for z in rep.numeric_roots)
    print("perpoly,in_G,zero_multiplicity,bipartite_by_coeffs,roots")
    print(f"{format_poly(rep.poly)},{_b(rep.is_purely_imaginary)},{rep.zero_multiplicity},"
          f"{_b(rep.is_bipartite_by_coeffs)},{roots}")
    return 0


def cmd_scan(args) -> int:
    grid = scan(args.family, args.l_max, args.k_max)
    _write(args.out, grid.to_csv())
    if args.svg:
        _write(args.svg, grid.to_svg())
    return 0


def cmd_census(args) -> int:
    if args.graph6_stream is not None:
        try:
            with open(args.graph6_stream) as fh:
                records = census_mod.run_census(args.n, read_graph6_stream(fh))
        except OSError as exc:
            raise GraphError(f"cannot read {args.graph6_stream}: {exc}") from None
    else:
        if args.n is None:
            raise UsageError("census needs n or --graph6-stream")
        if args.n > CENSUS_MAX_N:
            raise CapExceeded(f"built-in census supports n <= {CENSUS_MAX_N}; use --graph6-stream")
        records = census_mod.run_census(args.n)
    _write(args.out, census_mod.to_csv(records))
    print(census_mod.summarize(records).line(), file=sys.stderr if args.out is None else sys.stdout)
    return 0


def _rooted_from(family, g6, root, what) -> RootedGraph:
    if family is not None and g6 is not None:
        raise UsageError(f"give only one {what} graph source")
    if g6 is not None:
        g = graph6_decode(g6)
    elif family is not None:
        if family in HOSTS or "@" in family:
            if root is not None:
                raise UsageError(f"{family!r} already fixes the root; drop --root")
            return host_graph(family)
        g = parse_family(family)
    else:
        raise UsageError(f"missing {what} graph")
    root = 0 if root is None else root
    if not 0 <= root < g.n:
        raise GraphError(f"{what} root {root} out of range for n={g.n}")
    return RootedGraph(g, root)


def cmd_construct(args) -> int:
    host = _rooted_from(args.host, args.graph6, args.root, "host")
    attach_given = args.attach is not None or args.attach_graph6 is not None
    if attach_given == (args.shape is not None):
        raise UsageError("give either --shape/--l/--k or --attach/--attach-graph6")
    print(f"host: graph6={graph6_encode(host.graph)} root={host.root}")
    if args.shape is not None:
        spec = RootedTreeSpec(args.shape, args.l, args.k)
        other = build_rooted_tree(spec)
        print(f"tree: {spec.shape}(l={spec.l},k={spec.k})")
    else:
        spec = None
        other = _rooted_from(args.attach, args.attach_graph6, args.attach_root, "attached")
        print(f"attached: graph6={graph6_encode(other.graph)} root={other.root}")
    combined = coalesce(host, other)
    p = per_poly(combined.graph, EngineKind.SACHS)
    rep = classify_perspec(p)
    print(f"coalescence: n={combined.graph.n} m={combined.graph.m} graph6={graph6_encode(combined.graph)}")
    print(f"pi: {format_poly(p)}")
    print(f"schwenk: {_b(schwenk_coalescence_poly(host, other) == p)}")
    if spec is not None:
        h = h_poly(host, spec)
        branch, _ = branch_polys(spec)
        print(f"H: {format_poly(h)}")
        print(f"branch: {format_poly(branch)}")
        print(f"factorization: {_b(verify_factorization(host, spec))}")
        print(f"H_purely_imaginary: {_b(classify_perspec(h).is_purely_imaginary)}")
    print(f"in_G: {_b(rep.is_purely_imaginary)}")
    return 0


# ---------------------------------------------------------------------------

def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="named graph, e.g. K_{2,3}, P_4, C_6, theta(1,2,3), G_8, G_11")
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--edges", help="file in 'n m' + 'u v' lines format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="perspectra", description="Permanental polynomials and purely imaginary per-spectra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="print the permanental polynomial")
    _add_graph_source(p)
    p.add_argument("--engine", choices=[e.value for e in EngineKind], default="sachs")
    p.add_argument("--verify", action="store_true", help="cross-check every engine within its cap")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("classify", help="decide membership and show the per-spectrum")
    _add_graph_source(p)
    p.add_argument("--full-precision", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="exact (l, k) grid for a host/tree family")
    p.add_argument("--family", required=True, help="e.g. K23deg3xPathlike")
    p.add_argument("--l-max", type=int, default=DEFAULT_L_MAX)
    p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--svg", help="optional SVG scatter path")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("census", help="connected bipartite graphs on n vertices")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--graph6-stream", help="read candidate graphs from a graph6 file instead")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("construct", help="coalesce a rooted host with a tree or another rooted graph")
    p.add_argument("--host", help="K23deg3, K23deg2, K33, or a family name (with --root)")
    p.add_argument("--graph6", help="host as graph6 (with --root)")
    p.add_argument("--root", type=int)
    p.add_argument("--shape", choices=["starlike", "pathlike"])
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--attach", help="family name of the rooted graph to attach")
    p.add_argument("--attach-graph6", help="graph6 of the rooted graph to attach")
    p.add_argument("--attach-root", type=int)
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"perspectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"perspectra: size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OutputError as exc:
        print(f"perspectra: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    except (GraphError, PolyError, ValueError) as exc:
        print(f"perspectra: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
