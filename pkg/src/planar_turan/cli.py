"""``planar-turan`` command line.

Exit codes: 0 when every check passes, 1 when a mismatch, violation or
pattern occurrence is found, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Sequence, TextIO

from . import __version__
from .constructions import (
    C3_U_C4,
    c3c3_extremal,
    c3c4_extremal,
    double_wheel,
    small_extremal,
    turan_candidates,
    turan_formula,
)
from .embedding import face_stats, planarity_embed, trace_faces
from .face_blocks import block_report
from .graph import GRAPH6_MAX, Graph, GraphFormatError, format_edge_list, from_graph6, parse_edge_list, to_graph6
from .patterns import PATTERN_NAMES, PatternSpec, find_pattern, parse_pattern, witness_as_dict
from .search import LEMMAS, SEARCH_MAX, default_jobs, exact_ex_p, lemma_harness


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _graph_json(g: Graph) -> dict:
    return {"graph6": to_graph6(g) if g.n <= GRAPH6_MAX else None, "n": g.n, "edges": g.m}


def emit_report(report: dict, sink: TextIO, fmt: str = "json") -> None:
    """Write ``report`` as JSON (sorted keys) or, for ``verify``, as CSV rows."""
    if fmt == "json":
        sink.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        if report.get("command") != "verify":
            raise ValueError("CSV output is only defined for verify")
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(["n", "computed", "formula", "match", "exact", "discrepancy"])
        for r in report["rows"]:
            flag = int(r["discrepancy"]) if "discrepancy" in r else ""
            w.writerow([r["n"], r["computed"], r["formula"], int(r["match"]), int(r["exact"]), flag])
    else:
        raise ValueError(f"unknown report format {fmt!r}")


def _read_graph(path: str | None, graph6: bool) -> Graph:
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        if graph6:
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise GraphFormatError(f"expected one graph6 line, got {len(lines)}")
            return from_graph6(lines[0])
        return parse_edge_list(text)
    except GraphFormatError as exc:
        raise UsageError(f"{path or '<stdin>'}: {exc}") from exc


def _pattern(name: str) -> PatternSpec:
    try:
        return parse_pattern(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_verify(args, out: TextIO) -> tuple[dict, int]:
    pattern = _pattern(args.pattern)
    if not 3 <= args.n_max <= SEARCH_MAX:
        raise UsageError(f"--n-max must be in 3..{SEARCH_MAX}")
    jobs = args.jobs or default_jobs()
    rows = []
    for n in range(3, args.n_max + 1):
        r = exact_ex_p(n, pattern, budget=args.budget, jobs=jobs)
        formula = turan_formula(n, pattern)
        row = {
            "n": n,
            "computed": r.value if r.exact else None,
            "formula": formula,
            "match": r.exact and r.value == formula,
            "exact": r.exact,
            "bracket": [r.lower, r.upper],
            "witness": _graph_json(r.witness),
            "graphs_examined": r.graphs_examined,
        }
        if pattern == C3_U_C4:
            cands = turan_candidates(n, pattern)
            row["candidates"] = cands
            row["discrepancy"] = r.exact and any(v != r.value for v in cands.values())
        rows.append(row)
    report = {"command": "verify", "pattern": pattern.name, "rows": rows}
    if not args.json and not args.csv:
        out.write(f"ex_P(n, {pattern.name})\n")
        head = f"{'n':>3} {'computed':>9} {'formula':>8}  match"
        if pattern == C3_U_C4:
            head += "  candidates"
        out.write(head + "\n")
        for row in rows:
            comp = row["computed"] if row["exact"] else "{}..{}".format(*row["bracket"])
            line = f"{row['n']:>3} {comp!s:>9} {row['formula']:>8}  {'yes' if row['match'] else 'NO'}"
            if "candidates" in row:
                cands = ", ".join(f"{k}={v}" for k, v in row["candidates"].items())
                line += f"  {cands}" + ("  DISCREPANCY" if row["discrepancy"] else "")
            out.write(line + "\n")
    return report, 0 if all(r["match"] for r in rows) else 1


def _extremal_graph(pattern: PatternSpec, n: int) -> Graph:
    name = pattern.name
    if pattern.kind == "t_cycles":
        return double_wheel(n)
    if name in ("C3-C3", "2C3"):
        return c3c3_extremal(n) if n >= 7 else small_extremal(n, pattern)
    if name in ("C3-C4", "C3uC4"):
        return c3c4_extremal(n) if n >= 8 else small_extremal(n, pattern)
    raise UsageError(f"no extremal construction for {name}")


def _cmd_extremal(args, out: TextIO) -> tuple[dict, int]:
    pattern = _pattern(args.pattern)
    try:
        g = _extremal_graph(pattern, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "graph6" and g.n > GRAPH6_MAX:
        raise UsageError(f"graph6 output supports n <= {GRAPH6_MAX}; use --format edgelist")
    report = {"command": "extremal", "pattern": pattern.name, "n": args.n, "graph": _graph_json(g)}
    if not args.json:
        out.write(to_graph6(g) + "\n" if args.format == "graph6" else format_edge_list(g))
    return report, 0


def _cmd_check(args, out: TextIO) -> tuple[dict, int]:
    pattern = _pattern(args.pattern)
    g = _read_graph(args.file, args.graph6)
    witness = find_pattern(g, pattern)
    free = witness is None
    report = {
        "command": "check",
        "pattern": pattern.name,
        "graph": _graph_json(g),
        "free": free,
        "witness": witness_as_dict(witness),
    }
    if not args.json:
        out.write("FREE\n" if free else f"NOT FREE {json.dumps(witness_as_dict(witness), sort_keys=True)}\n")
    return report, 0 if free else 1


def _embed(g: Graph):
    rs = planarity_embed(g)
    if rs is None:
        raise _NotPlanar
    return rs


class _NotPlanar(Exception):
    pass


def _cmd_blocks(args, out: TextIO) -> tuple[dict, int]:
    g = _read_graph(args.file, args.graph6)
    rs = _embed(g)
    reports = block_report(rs, args.family)
    report = {"command": "blocks", "graph": _graph_json(g), "blocks": [r.as_dict() for r in reports]}
    if not args.json:
        out.write(f"{'block':<24} {'sum':>4} {'3|B|':>5} {'excess':>7}  class        catalog\n")
        for r in reports:
            verts = ",".join(map(str, sorted(r.block.vertices)))
            out.write(
                f"{verts:<24} {r.rv_sum:>4} {r.threshold:>5} {r.excess:>+7}  {r.classification:<12} {r.catalog_match or '-'}\n"
            )
    return report, 0


def _cmd_faces(args, out: TextIO) -> tuple[dict, int]:
    g = _read_graph(args.file, args.graph6)
    rs = _embed(g)
    stats = face_stats(trace_faces(rs), g)
    problems = stats.property1_violations()
    report = {"command": "faces", "graph": _graph_json(g), "stats": stats.as_dict(), "violations": problems}
    if not args.json:
        sizes = ", ".join(f"f{i}={c}" for i, c in sorted(stats.f.items()))
        out.write(f"faces: {stats.total} ({sizes})\n")
        for i in sorted(stats.f):
            out.write(f"  i={i}: e_i={stats.e_i(i)} e_ii={stats.e_ij(i, i)} i*f_i={i * stats.f_i(i)}\n")
        out.write("property 1: " + ("ok" if not problems else "; ".join(problems)) + "\n")
    return report, 0 if not problems else 1


def _cmd_harness(args, out: TextIO) -> tuple[dict, int]:
    try:
        r = lemma_harness(args.lemma, args.n_max, args.all_embeddings_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = r.as_dict()
    d.pop("elapsed_ms")
    report = {"command": "harness", **d}
    if not args.json:
        out.write(
            f"{r.lemma}: n={r.n_range[0]}..{r.n_range[1]}, {r.graphs} graphs, {r.embeddings} embeddings, "
            f"{r.checks} checks, {len(r.violations)} violations\n"
        )
        for v in r.violations:
            out.write("  VIOLATION " + json.dumps(v, sort_keys=True) + "\n")
        if r.positive_excess:
            out.write(f"  positive-excess blocks: {len(r.positive_excess)}\n")
    return report, 0 if r.passed else 1


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar-turan", description="Planar Turán numbers for linked and disjoint cycle pairs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    patterns = sorted(PATTERN_NAMES)

    def graph_input(sp):
        sp.add_argument("file", nargs="?", help="edge-list file (default: stdin)")
        sp.add_argument("--graph6", action="store_true", help="input is a graph6 line")

    def json_flag(sp):
        sp.add_argument("--json", action="store_true", help="print a JSON report")

    sp = sub.add_parser("verify", help="compute ex_P(n, H) exhaustively and compare with the formula")
    sp.add_argument("--pattern", required=True, help="one of " + ", ".join(patterns))
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--budget", type=float, help="seconds per n before reporting a bracket")
    sp.add_argument("--jobs", type=int, help="worker processes (default: $TURAN_JOBS or CPU count)")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    sp = sub.add_parser("extremal", help="emit an extremal construction")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    json_flag(sp)

    sp = sub.add_parser("check", help="test a graph for a forbidden pattern")
    sp.add_argument("--pattern", required=True)
    graph_input(sp)
    json_flag(sp)

    sp = sub.add_parser("blocks", help="3-face block decomposition and block sums")
    sp.add_argument("--family", choices=("c33", "c34"), help="restrict catalogue matching")
    graph_input(sp)
    json_flag(sp)

    sp = sub.add_parser("faces", help="face statistics with the incidence identities")
    graph_input(sp)
    json_flag(sp)

    sp = sub.add_parser("harness", help="run a lemma check over all small plane graphs")
    sp.add_argument("--lemma", required=True, choices=LEMMAS)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--all-embeddings-max", type=int, default=6, help="largest n checked in every embedding")
    json_flag(sp)
    return p


_COMMANDS = {
    "verify": _cmd_verify,
    "extremal": _cmd_extremal,
    "check": _cmd_check,
    "blocks": _cmd_blocks,
    "faces": _cmd_faces,
    "harness": _cmd_harness,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"planar-turan: error: {exc}\n")
        return 2
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        err.write("planar-turan: error: --jobs must be positive\n")
        return 2
    start = time.monotonic()
    try:
        report, code = _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"planar-turan: error: {exc}\n")
        return 2
    except _NotPlanar:
        if getattr(args, "json", False):
            emit_report({"command": args.command, "planar": False, "version": __version__}, out)
        else:
            out.write("NOT PLANAR\n")
        return 1
    report["version"] = __version__
    report["elapsed_ms"] = round((time.monotonic() - start) * 1000)
    if getattr(args, "json", False):
        emit_report(report, out, "json")
    elif getattr(args, "csv", False):
        emit_report(report, out, "csv")
    return code


if __name__ == "__main__":
    sys.exit(main())
