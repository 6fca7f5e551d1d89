"""Command-line interface: ``chsnorms <subcommand> [options]``.

Graph input is one of ``--graph6 STR`` (``-`` reads stdin), ``--edges PATH``
or ``--family SPEC`` (``P5``, ``K7``, ``S4``, ``K2,3``, ``C5``). Edge-list
vertices are 1-based. Output is either aligned text or TSV with a header
row; exact rationals print as ``num/den`` and floats with 12 significant
digits.

Exit status: 0 on success, 2 on invalid input, 3 when ``verify`` finds a
violation of the extremal or norm bounds.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import chs, graphio, spectra, walks
from .analysis import cospectral, extremal
from .analysis.enumeration import MAX_CONNECTED_ORDER
from .errors import ChsError, ExtremalViolation, NotSingularlyCospectral
from .graph import family, parse_family
from .partitions import partitions_of, partitions_without_ones, z_of

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 2, 3


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


class Table:
    def __init__(self, columns):
        self.columns = list(columns)
        self.rows = []

    def add(self, *values):
        self.rows.append([fmt(v) for v in values])

    def render(self, style: str) -> str:
        if style == "tsv":
            lines = ["\t".join(self.columns)] + ["\t".join(r) for r in self.rows]
        else:
            widths = [max(len(c), *(len(r[i]) for r in self.rows)) if self.rows else len(c)
                      for i, c in enumerate(self.columns)]
            lines = ["  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip()]
            lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in self.rows]
        return "\n".join(lines) + "\n"


def _read_stdin_records() -> list[str]:
    return [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]


def load_graphs(args, count: int = 1):
    """Return ``count`` ``(label, Graph)`` pairs from the single input source."""
    sources = [s for s in ("graph6", "edges", "family") if getattr(args, s)]
    if len(sources) != 1:
        raise ChsError("give exactly one of --graph6, --edges, --family")
    kind = sources[0]
    values = getattr(args, kind)
    if kind == "graph6" and values == ["-"]:
        values = _read_stdin_records()
    if len(values) != count:
        raise ChsError(f"expected {count} graph(s) from --{kind}, got {len(values)}")
    out = []
    for v in values:
        if kind == "graph6":
            out.append((v, graphio.parse_graph6(v)))
        elif kind == "edges":
            g = graphio.parse_edge_list(Path(v).read_text(encoding="utf-8"))
            out.append((graphio.emit_graph6(g), g))
        else:
            out.append((v, family(parse_family(v))))
    return out


def _even_degrees(ds) -> list[int]:
    return sorted(set(ds))


def cmd_spectrum(args) -> Table:
    label, g = load_graphs(args)[0]
    spec = spectra.eigenvalues(g)
    k = args.k if args.k is not None else g.order
    t = Table(["graph", "n", "m", "spectral", "energy", f"ky_fan_{k}", f"schatten_{args.p:g}",
               "eigenvalues"])
    t.add(label, g.order, g.edge_count, spectra.spectral_norm(spec), spectra.energy(spec),
          spectra.ky_fan(spec, k), spectra.schatten(spec, args.p),
          ",".join(fmt(0.0 if abs(x) <= spec.tolerance else x) for x in spec.tolist()))
    return t


def cmd_norm(args) -> Table:
    label, g = load_graphs(args)[0]
    t = Table(["graph", "d", "exact_dth_power", "norm", "route_agreement"])
    for d in _even_degrees(args.d):
        r = chs.chs_norm(g, d, graph_id=label)
        t.add(label, d, r.exact_dth_power, r.float_norm, r.route_agreement)
    return t


def cmd_walks(args) -> Table:
    label, g = load_graphs(args)[0]
    counts = walks.closed_walk_counts(g, args.k)
    t = Table(["graph", "k", "closed_walks"])
    for k in range(1 if args.all else args.k, args.k + 1):
        t.add(label, k, counts[k])
    return t


def cmd_partitions(args) -> Table:
    parts = partitions_without_ones(args.d) if args.no_ones else partitions_of(args.d)
    t = Table(["d", "partition", "z", "class_size"])
    for p in parts:
        z = z_of(p)
        t.add(args.d, str(p), z, math.factorial(args.d) // z)
    return t


def _compare_table(lg, g, lh, h, d_max) -> Table:
    t = Table(["g", "h", "singularly_cospectral", "distinguishing_d", "g_dth_power",
               "h_dth_power"])
    try:
        d = cospectral.distinguish(g, h, d_max)
    except NotSingularlyCospectral as exc:
        t.add(lg, lh, False, f"none (tr(A^{exc.power}) differs)", "-", "-")
        return t
    if d is None:
        t.add(lg, lh, True, f"none <= {d_max}", "-", "-")
    else:
        cg, ch = walks.closed_walk_counts(g, d), walks.closed_walk_counts(h, d)
        t.add(lg, lh, True, d, chs.dth_power_from_walks(cg.counts, d),
              chs.dth_power_from_walks(ch.counts, d))
    return t


def cmd_compare(args) -> Table:
    (lg, g), (lh, h) = load_graphs(args, count=2)
    return _compare_table(lg, g, lh, h, args.d_max)


def cmd_pair(args) -> Table:
    _, f = load_graphs(args)[0]
    g, h = cospectral.make_pair(f)
    return _compare_table(graphio.emit_graph6(g), g, graphio.emit_graph6(h), h, args.d_max)


def cmd_bounds(args) -> Table:
    label, g = load_graphs(args)[0]
    t = Table(["graph", "d", "energy_bound_ok", "spectral_lower_ok", "spectral_upper_ok",
               "energy_slack", "spectral_lower_slack", "spectral_upper_slack"])
    for d in _even_degrees(args.d):
        b = extremal.check_theorem3(g, d, graph_id=label)
        t.add(label, d, b.energy_bound_ok, b.spectral_lower_ok, b.spectral_upper_ok,
              b.energy_slack, b.spectral_lower_slack, b.spectral_upper_slack)
    return t


def _max_connected_order() -> int:
    raw = os.environ.get("CHS_MAX_N", str(MAX_CONNECTED_ORDER))
    try:
        return int(raw)
    except ValueError:
        raise ChsError(f"CHS_MAX_N must be an integer, got {raw!r}") from None


class _Violation(Exception):
    def __init__(self, table):
        self.table = table


def cmd_verify(args) -> Table:
    if args.mode == "connected" and args.n > _max_connected_order():
        raise ChsError(f"n={args.n} exceeds CHS_MAX_N={_max_connected_order()}")
    reports = extremal.verify_theorem2_multi(
        args.n, _even_degrees(args.d), args.mode, jobs=args.jobs,
        shard_count=args.shard_count, shard_index=args.shard_index,
        check_bounds=not args.no_bounds, limit=args.limit)
    t = Table(["n", "d", "mode", "scanned", "min", "max", "path_value", "top_value",
               "argmin_count", "argmin_paths", "argmax_count", "argmax_top", "bound_violations",
               "argmin", "argmax"])
    bad = False
    for d, r in reports.items():
        viol = r.bound_violations if r.bound_violations is not None else "-"
        bad |= bool(r.bound_violations)
        t.add(r.n, d, r.mode, r.scanned, r.min_value, r.max_value, r.path_value, r.top_value,
              r.argmin_count, r.argmin_path_count, r.argmax_count, r.argmax_top_count, viol,
              ",".join(r.argmin), ",".join(r.argmax))
    if bad:
        raise _Violation(t)
    return t


def cmd_table(args) -> Table:
    t = Table(["family", "n", "d", "exact_dth_power", "norm"])
    for n in range(args.n_min, args.n_max + 1):
        spec = f"{args.kind}{n}"
        g = family(parse_family(spec))
        counts = walks.closed_walk_counts(g, max(args.d))
        for d in _even_degrees(args.d):
            exact = chs.dth_power_from_walks(counts.counts, d)
            t.add(spec, n, d, exact, float(exact) ** (1.0 / d))
    return t


def _even(text: str) -> int:
    d = int(text)
    if d < 2 or d % 2:
        raise argparse.ArgumentTypeError(f"d must be an even integer >= 2, got {text}")
    return d


def _degree_list(text: str) -> list[int]:
    return [_even(x) for x in text.split(",") if x]


def _add_input(p, many: bool = False):
    g = p.add_argument_group("graph input (exactly one source)")
    # single-graph commands still store a list so load_graphs treats both alike
    kw = {"nargs": "+"} if many else {"type": lambda v: [v]}
    g.add_argument("--graph6", metavar="STR", help="graph6 record; '-' reads stdin", **kw)
    g.add_argument("--edges", metavar="PATH",
                   help="edge-list file: 'n m' then m lines 'i j', 1-based", **kw)
    g.add_argument("--family", metavar="SPEC", help="P5, K7, S4, K2,3 or C5", **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chsnorms", description="CHS d-norms of simple graphs (vertices are 1-based in edge lists).")
    parser.add_argument("--format", choices=("text", "tsv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues and singular-value norms")
    _add_input(p)
    p.add_argument("--k", type=int, help="Ky Fan index (default n)")
    p.add_argument("--p", type=float, default=2.0, help="Schatten exponent (default 2)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("norm", help="CHS d-norms, exact and floating point")
    _add_input(p)
    p.add_argument("--d", type=_degree_list, default=[2, 4, 6], help="even degrees, comma separated")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("walks", help="closed-walk counts tr(A^k)")
    _add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="print C_1..C_k")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("partitions", help="partitions of d with z and class sizes")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--no-ones", action="store_true", help="only partitions without a part 1")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("compare", help="first even d separating two singularly cospectral graphs")
    _add_input(p, many=True)
    p.add_argument("--d-max", type=_even, default=20)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("pair", help="build (F+F, FxK2) for a nonbipartite F and compare them")
    _add_input(p)
    p.add_argument("--d-max", type=_even, default=20)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("verify", help="exhaustive extremal sweep over connected graphs or trees")
    p.add_argument("--mode", choices=extremal.MODES, default="connected")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=_degree_list, default=[2, 4, 6, 8])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--shard-index", type=int)
    p.add_argument("--shard-count", type=int)
    p.add_argument("--limit", type=int, default=20, help="extremal graphs listed per side")
    p.add_argument("--no-bounds", action="store_true", help="skip the norm-bound checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="energy and spectral bounds on the CHS norm")
    _add_input(p)
    p.add_argument("--d", type=_degree_list, default=[2, 4, 6])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="norm table over a family")
    p.add_argument("--kind", choices=("P", "K", "S", "C"), required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d", type=_degree_list, default=[2, 4, 6])
    p.set_defaults(func=cmd_table)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        table = args.func(args)
    except _Violation as exc:
        stdout.write(exc.table.render(args.format))
        print("chsnorms: norm bound violated", file=stderr)
        return EXIT_VIOLATION
    except ExtremalViolation as exc:
        print(f"chsnorms: {exc}", file=stderr)
        return EXIT_VIOLATION
    except (ChsError, OSError) as exc:
        print(f"chsnorms: error: {exc}", file=stderr)
        return EXIT_USAGE
    stdout.write(table.render(args.format))
    return EXIT_OK


def main():
    sys.exit(run())
