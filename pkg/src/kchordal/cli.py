"""Command-line interface.

Exit codes: 0 when the property holds (or the command simply succeeded),
1 when it fails and a witness is reported, 2 on usage or input errors.
With ``--json`` one JSON object per graph goes to stdout and the human
summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence, TextIO

from .chordality import chordality, longer_induced_cycle
from .graph_core import Graph, GraphFormatError, encode_edge_list, encode_graph6, parse_edge_list, parse_graph6
from .oracle_harness import (
    MAX_ENUMERATION_N,
    dumps,
    enumerate_labeled_graphs,
    find_independence_witnesses,
    random_graph,
    random_graphs,
    sweep,
)
from .separators import check_separator_condition, enumerate_minimal_separators
from .simplicial import OrderingCertificate, k_simplicial_ordering, verify_ordering


class InputError(Exception):
    pass


# ---------------------------------------------------------------- input


def _read_text(source: str, stdin: TextIO) -> str:
    if source == "-":
        return stdin.read()
    try:
        with open(source, encoding="latin-1") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """One edge-list graph, or one graph per non-empty graph6 line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("no graph in input")
    if fmt == "auto":
        # graph6 bytes are 63..126, so a digits-only first line means edge list
        fmt = "edgelist" if lines[0].isdigit() else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines]


def _parse_ks(text: str) -> list[int]:
    ks: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            ks.extend(range(int(lo), int(hi) + 1))
        elif part:
            ks.append(int(part))
    if not ks or any(k < 3 for k in ks):
        raise argparse.ArgumentTypeError(f"k values must be integers >= 3, got {text!r}")
    return ks


def _k_value(text: str) -> int:
    k = int(text)
    if k < 3:
        raise argparse.ArgumentTypeError(f"k must be >= 3, got {k}")
    return k


def _read_orderings(path: str, stdin: TextIO) -> list[list[int]]:
    text = _read_text(path, stdin).strip()
    orders = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("{") or line.startswith("["):
            try:
                doc = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"bad ordering JSON: {exc}") from None
            order = doc.get("order") if isinstance(doc, dict) else doc
            if order is None:
                raise InputError("ordering JSON has no 'order' field")
            orders.append([int(v) for v in order])
        else:
            try:
                orders.append([int(t) for t in line.replace(",", " ").split()])
            except ValueError:
                raise InputError(f"bad ordering line: {line!r}") from None
    if not orders:
        raise InputError("ordering file is empty")
    return orders


# ---------------------------------------------------------------- commands
# each command returns (exit_code, reports, human lines)


def cmd_chordality(graphs, args):
    reports, lines = [], []
    for g in graphs:
        res = chordality(g)
        reports.append(res.to_dict())
        lines.append(f"chordality {res.value}" + (f" witness {list(res.witness.vertices)}" if res.witness else ""))
    return 0, reports, lines


def cmd_check(graphs, args):
    code, reports, lines = 0, [], []
    for g in graphs:
        cycle = longer_induced_cycle(g, args.k)
        ok = cycle is None
        reports.append({"k": args.k, "k_chordal": ok, "witness": None if ok else list(cycle.vertices)})
        lines.append(f"{args.k}-chordal" if ok else f"not {args.k}-chordal: induced cycle {list(cycle.vertices)}")
        code = max(code, 0 if ok else 1)
    return code, reports, lines


def cmd_ordering(graphs, args):
    code, reports, lines = 0, [], []
    for g in graphs:
        res = k_simplicial_ordering(g, args.k)
        if isinstance(res, OrderingCertificate):
            reports.append({"status": "certificate", **res.to_dict()})
            lines.append(f"{args.k}-simplicial ordering {list(res.order)}")
        else:
            reports.append({"status": "failure", **res.to_dict()})
            lines.append(f"no {args.k}-simplicial vertex at step {res.step}; residual {res.to_dict()['residual']}")
            code = 1
    return code, reports, lines


def cmd_verify(graphs, args):
    orders = _read_orderings(args.ordering, args.stdin)
    if len(orders) != len(graphs):
        raise InputError(f"{len(graphs)} graph(s) but {len(orders)} ordering(s)")
    code, reports, lines = 0, [], []
    for g, order in zip(graphs, orders):
        try:
            ok, pos = verify_ordering(g, order, args.k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        reports.append({"k": args.k, "order": order, "valid": ok, "failed_at": pos})
        lines.append("valid" if ok else f"invalid at position {pos} (vertex {order[pos]})")
        code = max(code, 0 if ok else 1)
    return code, reports, lines


def cmd_separators(graphs, args):
    code, reports, lines = 0, [], []
    for g in graphs:
        records, violation = [], None
        for rec in enumerate_minimal_separators(g):
            records.append(rec.to_dict())
            if violation is None:
                violation = check_separator_condition(g, rec, args.k)
        reports.append({
            "k": args.k,
            "separators": records,
            "k_chordal": violation is None,
            "violation": None if violation is None else violation.to_dict(),
        })
        lines.append(f"{len(records)} minimal separator(s)")
        lines.extend(f"  {r['separator']}" for r in records)
        if violation is not None:
            code = 1
            lines.append(f"violation: x={violation.x} y={violation.y} "
                         f"{list(violation.path_i.vertices)} + {list(violation.path_j.vertices)} "
                         f"= {violation.total} > {args.k}")
    return code, reports, lines


def cmd_sweep(args):
    ks = args.k
    if args.random:
        if args.n is None or args.p is None:
            raise InputError("--random needs --n and --p")
        corpus = random_graphs(args.n, args.p, args.count, args.seed)
    else:
        if args.max_n is None:
            raise InputError("sweep needs --max-n or --random")
        if args.max_n > MAX_ENUMERATION_N:
            raise InputError(f"labeled enumeration is capped at n={MAX_ENUMERATION_N}")
        corpus = (g for n in range(args.min_n, args.max_n + 1) for g in enumerate_labeled_graphs(n))
    summary = sweep(corpus, ks, workers=args.workers)
    reports = [r.to_dict() for r in summary.failures] + [{"summary": summary.to_dict()}]
    return (1 if summary.failures else 0), reports, summary.table().splitlines()


def cmd_witness(args):
    c1_not_c2, c2_not_c1 = find_independence_witnesses(args.max_n, args.k)
    doc = {
        "max_n": args.max_n,
        "ks": args.k,
        "C1_NOT_C2": None if c1_not_c2 is None else c1_not_c2.to_dict(),
        "C2_NOT_C1": None if c2_not_c1 is None else c2_not_c1.to_dict(),
    }
    lines = []
    for name, w in (("C1 and not C2", c1_not_c2), ("C2 and not C1", c2_not_c1)):
        if w is None:
            lines.append(f"{name}: not found up to n={args.max_n}")
        else:
            lines.append(f"{name}: vertex {w.vertex}, k={w.k}, edges {w.graph.edges()}")
    return (0 if c1_not_c2 and c2_not_c1 else 1), [doc], lines


def cmd_gen(args):
    if args.n is None or args.p is None:
        raise InputError("gen needs --n and --p")
    graphs = [random_graph(args.n, args.p, args.seed + i) for i in range(args.count)]
    if args.format == "edgelist":
        return 0, None, [encode_edge_list(g).rstrip("\n") for g in graphs]
    return 0, None, [encode_graph6(g) for g in graphs]


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON lines on stdout, summary on stderr")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", help="graph file, or - for standard input")
    graph_in.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto")

    needs_k = argparse.ArgumentParser(add_help=False)
    needs_k.add_argument("--k", type=_k_value, required=True)

    parser = argparse.ArgumentParser(prog="kchordal", description="k-chordal graph analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("chordality", parents=[common, graph_in], help="longest induced cycle")
    sub.add_parser("check", parents=[common, graph_in, needs_k], help="is the graph k-chordal")
    sub.add_parser("ordering", parents=[common, graph_in, needs_k], help="k-simplicial elimination ordering")
    p = sub.add_parser("verify", parents=[common, graph_in, needs_k], help="verify a k-simplicial ordering")
    p.add_argument("--ordering", required=True, help="ordering file (JSON certificate or vertex list)")
    sub.add_parser("separators", parents=[common, graph_in, needs_k], help="minimal separators and path bound")

    p = sub.add_parser("sweep", parents=[common], help="three-way equivalence sweep")
    p.add_argument("--k", type=_parse_ks, required=True, help="comma list or range, e.g. 3,4,5 or 3-6")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--random", action="store_true", help="sample G(n, p) instead of enumerating")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("witness", parents=[common], help="search C1/C2 independence witnesses")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--k", type=_parse_ks, required=True)

    p = sub.add_parser("gen", help="emit random G(n, p) graphs")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    return parser


GRAPH_COMMANDS: dict[str, Callable] = {
    "chordality": cmd_chordality,
    "check": cmd_check,
    "ordering": cmd_ordering,
    "verify": cmd_verify,
    "separators": cmd_separators,
}

OTHER_COMMANDS: dict[str, Callable] = {
    "sweep": cmd_sweep,
    "witness": cmd_witness,
    "gen": cmd_gen,
}


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.stdin = stdin

    try:
        if args.command in GRAPH_COMMANDS:
            graphs = parse_graphs(_read_text(args.input, stdin), args.format)
            code, reports, lines = GRAPH_COMMANDS[args.command](graphs, args)
        else:
            code, reports, lines = OTHER_COMMANDS[args.command](args)
    except (GraphFormatError, InputError, ValueError) as exc:
        print(f"kchordal: error: {exc}", file=stderr)
        return 2

    if reports is None:
        for line in lines:
            print(line, file=stdout)
    elif getattr(args, "json", False):
        for r in reports:
            print(dumps(r), file=stdout)
        for line in lines:
            print(line, file=stderr)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
