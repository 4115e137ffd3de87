"""Command line front end.

Exit codes: 0 ok, 1 usage or parse error, 2 invalid embedding,
3 verification failed, 4 no colouring within the step limit.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .dot import to_dot
from .generate import GenConfig, GenerationError, gen_planar
from .graph import EmbeddingError, GraphError, format_graph, parse_added_edges, parse_graph
from .solver import SearchConfig, SearchError, solve
from .system import Coloring, build_full_system, rank_exact, reduce_system
from .triangulate import Triangulation, TriangulationError, enumerate_triangles, triangulate
from .verify import VerificationError, audit, node_map_for, verify_lemma1, verify_lemma2, verify_proper

EXIT_OK, EXIT_USAGE, EXIT_EMBEDDING, EXIT_VERIFY, EXIT_NO_COLORING = 0, 1, 2, 3, 4


class CliError(Exception):
    """Failure with an exit code; ``stdout`` keeps any payload produced so far."""

    def __init__(self, message: str, code: int = EXIT_USAGE, stdout: str = ""):
        super().__init__(message)
        self.code = code
        self.stdout = stdout


@dataclass
class RunOutcome:
    exit_code: int
    stdout: str
    stderr: str


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(f"{self.format_usage()}{self.prog}: error: {message}")


def parse_coloring(text: str) -> dict[int, tuple[str, int]]:
    """Read ``<id> <kind> <color>`` lines (``solve`` output is accepted too)."""
    out: dict[int, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        if len(fields) == 6 and fields[0] == "component" and fields[2] == "kind" and fields[4] == "color":
            fields = [fields[1], fields[3], fields[5]]
        if len(fields) != 3 or fields[1] not in ("node", "face"):
            raise CliError(f"coloring line {lineno}: expected '<id> <node|face> <color>', got {raw!r}")
        try:
            comp, color = int(fields[0]), int(fields[2])
        except ValueError:
            raise CliError(f"coloring line {lineno}: non-integer field in {raw!r}") from None
        if color not in (1, 2, 3, 4):
            raise CliError(f"coloring line {lineno}: color {color} outside 1..4")
        if comp in out:
            raise CliError(f"coloring line {lineno}: component {comp} listed twice")
        out[comp] = (fields[1], color)
    return out


def _read(path: str, stdin: str | None) -> str:
    if path == "-":
        return stdin if stdin is not None else sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_triangulation(text: str) -> Triangulation:
    """Triangulate the file's graph, honouring ``c added`` records of an earlier run."""
    g = parse_graph(text)
    t = triangulate(g)
    added = parse_added_edges(text)
    if added and not t.added_edges:
        missing = [e for e in added if not g.has_edge(*e)]
        if missing:
            raise CliError(f"recorded added edges not in graph: {missing}")
        t = Triangulation(g, tuple(added), g.without_edges(added))
    return t


def _cmd_gen(args, stdin) -> str:
    try:
        cfg = GenConfig(args.n, args.seed, args.deletions)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    g = gen_planar(cfg)
    return format_graph(g, [f"gen n={cfg.n} seed={cfg.seed} deletions={cfg.deletions}"])


def _cmd_triangulate(args, stdin) -> str:
    t = triangulate(parse_graph(_read(args.graph, stdin)))
    return format_graph(t.graph, [f"added e {u} {v}" for u, v in t.added_edges])


def _cmd_system(args, stdin) -> str:
    s = build_full_system(_load_triangulation(_read(args.graph, stdin)))
    return (s if args.full else reduce_system(s)).format()


def _cmd_rank(args, stdin) -> str:
    s = build_full_system(_load_triangulation(_read(args.graph, stdin)))
    if not args.full:
        s = reduce_system(s)
    rank, nullity = rank_exact(s)
    return f"rows={len(s.rows)} rank={rank} nullity={nullity}\n"


def _search_config(args) -> SearchConfig:
    try:
        return SearchConfig(args.order, args.step_limit)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _cmd_solve(args, stdin) -> str:
    t = _load_triangulation(_read(args.graph, stdin))
    try:
        return solve(t, _search_config(args)).format()
    except SearchError as exc:
        raise CliError(str(exc), EXIT_NO_COLORING, "UNCOLORABLE-WITHIN-LIMIT\n") from None


def _coloring_for(t: Triangulation, entries: dict[int, tuple[str, int]]) -> Coloring:
    faces = frozenset(tri.face for tri in enumerate_triangles(t))
    nodes = set(node_map_for(t).values())
    for comp, (kind, _) in entries.items():
        expected = "face" if comp in faces else "node" if comp in nodes else None
        if expected is None:
            raise CliError(f"coloring names unknown component {comp}", EXIT_VERIFY)
        if kind != expected:
            raise CliError(f"component {comp} is a {expected}, coloring says {kind}", EXIT_VERIFY)
    return Coloring({k: c for k, (_, c) in sorted(entries.items())}, faces)


def _cmd_verify(args, stdin) -> str:
    text = _read(args.graph, stdin)
    t = _load_triangulation(text)
    coloring = _coloring_for(t, parse_coloring(_read(args.coloring, stdin)))
    node_map = node_map_for(t)
    out, failed = "", []
    try:
        proper = verify_proper(t.graph, coloring, node_map)
        out += f"proper {str(proper).lower()}\n"
        if not proper:
            failed.append("proper")
        if coloring.faces and all(f in coloring.assignment for f in coloring.faces):
            lemma2 = verify_lemma2(t, coloring)
            out += f"lemma2 {str(lemma2).lower()}\n"
            if not lemma2:
                failed.append("lemma2")
        if proper:
            out += f"lemma1 {str(verify_lemma1(t, coloring)).lower()}\n"
    except VerificationError as exc:
        raise CliError(f"verification failed: {exc}", EXIT_VERIFY, out) from None
    if failed:
        raise CliError(f"verification failed: {', '.join(failed)}", EXIT_VERIFY, out)
    return out


def _cmd_audit(args, stdin) -> str:
    report = audit(_load_triangulation(_read(args.graph, stdin)), _search_config(args))
    out = report.to_json() if args.format == "json" else report.to_text()
    if not report.lemma3_holds:
        raise CliError("rank of the reduced system is below its row count", EXIT_VERIFY, out)
    if not report.integer_solution_found:
        raise CliError("no coloring found within the step limit", EXIT_NO_COLORING, out)
    return out


def _cmd_export_dot(args, stdin) -> str:
    t = _load_triangulation(_read(args.graph, stdin))
    inverse = {c: v for v, c in node_map_for(t).items()}
    if args.coloring:
        coloring = _coloring_for(t, parse_coloring(_read(args.coloring, stdin)))
    else:
        try:
            coloring = solve(t)
        except SearchError:
            coloring = None
    colors = None
    if coloring is not None:
        colors = {inverse[i]: c for i, c in coloring.node_colors().items()}
    return to_dot(t, colors)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="planar4c", description="Four-colouring pipeline for embedded planar graphs.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gen", help="write a seeded random planar graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--deletions", type=int, default=0)
    g.set_defaults(func=_cmd_gen)

    def graph_cmd(name, func, help_):
        c = sub.add_parser(name, help=help_)
        c.add_argument("graph", help="graph file, '-' for stdin")
        c.set_defaults(func=func)
        return c

    graph_cmd("triangulate", _cmd_triangulate, "triangulate bounded faces")
    graph_cmd("system", _cmd_system, "print the linear system").add_argument(
        "--full", action="store_true", help="print the unreduced system")
    graph_cmd("rank", _cmd_rank, "exact rank of the reduced system").add_argument(
        "--full", action="store_true", help="use the unreduced system")
    for name, func, help_ in (("solve", _cmd_solve, "find a colouring"),
                              ("audit", _cmd_audit, "audit rank and integer feasibility")):
        c = graph_cmd(name, func, help_)
        c.add_argument("--order", choices=("most-constrained", "input-order"), default="most-constrained")
        c.add_argument("--step-limit", type=int, default=None)
        if name == "audit":
            c.add_argument("--format", choices=("text", "json"), default="text")
    v = graph_cmd("verify", _cmd_verify, "check a colouring file against a graph")
    v.add_argument("coloring", help="coloring file, '-' for stdin")
    graph_cmd("export-dot", _cmd_export_dot, "write Graphviz DOT").add_argument(
        "--coloring", default=None, help="coloring file (default: solve)")
    return p


def run(argv: Sequence[str], stdin: str | None = None) -> RunOutcome:
    parser = build_parser()
    err = io.StringIO()
    try:
        with redirect_stderr(err):
            try:
                args = parser.parse_args(list(argv))
            except SystemExit as exc:  # --help
                return RunOutcome(int(exc.code or 0), "", err.getvalue())
        return RunOutcome(EXIT_OK, args.func(args, stdin), "")
    except CliError as exc:
        return RunOutcome(exc.code, exc.stdout, err.getvalue() + str(exc) + "\n")
    except (EmbeddingError, TriangulationError) as exc:
        return RunOutcome(EXIT_EMBEDDING, "", f"invalid embedding: {exc}\n")
    except (GraphError, GenerationError) as exc:
        return RunOutcome(EXIT_USAGE, "", f"error: {exc}\n")


def main(argv: Sequence[str] | None = None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(outcome.stdout)
    sys.stderr.write(outcome.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
