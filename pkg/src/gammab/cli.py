"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (bad graph, over-cap input),
2 on usage errors. Results go to stdout as JSON (CSV for ``sweep --format csv``);
diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bcolor, grundy, lab, monotone, pattern
from .generators import parse_family
from .graph import GraphError, Graph, degree_sequence, emit_graph, parse_graph


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _colors(text: str, g: Graph) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--coloring must be comma-separated integers, got {text!r}") from None
    if len(vals) != g.n:
        raise GraphError(f"coloring has {len(vals)} entries for {g.n} vertices")
    return vals


def _pattern_graph(text: str) -> Graph:
    if text.startswith("g6:"):
        return parse_graph(text[3:], "graph6")
    return parse_family(text).build()


def _range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--range must look like 2..6 or 2,4,6; got {text!r}") from None


def _cap(args) -> int:
    return args.cap if args.cap is not None else lab.default_cap()


def _guard(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise GraphError(f"{what} capped at n <= {cap}, graph has n={g.n} (raise with --cap or ${lab.CAP_ENV})")


def _load(args) -> Graph:
    if args.g6 is not None:
        return parse_graph(args.g6, "graph6")
    if args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise GraphError(f"cannot read {args.file}: {exc.strerror}") from None
        return parse_graph(text, "edge-list")
    return parse_family(args.family).build()


# subcommands ----------------------------------------------------------------

def cmd_gen(args, g):
    if args.format == "json":
        return _dump({"n": g.n, "graph6": emit_graph(g, "graph6"), "edges": [list(e) for e in g.edges()]})
    text = emit_graph(g, args.format)
    return text if text.endswith("\n") else text + "\n"


def cmd_gamma(args, g):
    if args.oracle:
        value, order = grundy.grundy_oracle_search(g)
        method = "oracle"
    else:
        _guard(g, _cap(args), "exact Grundy number")
        value, order = grundy.grundy_number(g)
        method = "exact"
    coloring = grundy.first_fit(g, order)
    return _dump({"gamma": value, "witness": list(order), "coloring": list(coloring), "method": method})


def cmd_bnum(args, g):
    _guard(g, _cap(args), "exact b-chromatic number")
    value, col = bcolor.b_number(g)
    return _dump({"value": value, "witness": list(col)})


def cmd_m(args, g):
    return _dump({"value": bcolor.m_number(g), "witness": list(degree_sequence(g))})


def cmd_chi(args, g):
    col = bcolor.optimal_coloring(g)
    return _dump({"value": bcolor.num_colors(col), "witness": list(col)})


def cmd_omega(args, g):
    clique = bcolor.max_clique(g)
    return _dump({"value": len(clique), "witness": list(clique)})


def cmd_eliminate(args, g):
    out = bcolor.eliminate_classes(g, _colors(args.coloring, g))
    return _dump({"value": bcolor.num_colors(out), "witness": list(out)})


def cmd_check_grundy(args, g):
    col = _colors(args.coloring, g)
    return _dump({"valid": grundy.is_grundy_coloring(g, col), "proper": bcolor.is_proper(g, col)})


def cmd_check_bcoloring(args, g):
    col = _colors(args.coloring, g)
    proper = bcolor.is_proper(g, col) and all(c >= 1 for c in col)
    report = bcolor.domination_report(g, col) if proper else None
    return _dump({
        "valid": bcolor.is_b_coloring(g, col),
        "proper": proper,
        "dominators": None if report is None else {str(c): v for c, v in report.items()},
    })


def cmd_forb(args, g):
    found = {}
    for text in args.pattern:
        emb = pattern.find_induced(g, _pattern_graph(text))
        found[text] = None if emb is None else list(emb)
    return _dump({"free": all(v is None for v in found.values()), "embeddings": found})


def cmd_monotone(args, g):
    if args.sample is not None:
        trials, seed = args.sample
        verdict = monotone.sample_b_monotone(g, trials, seed)
    else:
        cap = args.cap if args.cap is not None else monotone.EXACT_MAX_N
        verdict = monotone.is_b_monotone(g, cap=cap)
    return _dump(verdict.to_dict())


def cmd_profile(args, g):
    cap = _cap(args)
    rec = lab.profile(g, lab.Caps(gamma=cap, b=cap))
    return _dump(rec.to_dict())


def cmd_sweep(args, _g):
    cap = _cap(args)
    report = lab.sweep_family(
        args.family, _range(args.range), seed=args.seed,
        caps=lab.Caps(gamma=cap, b=cap), workers=args.workers,
    )
    text = lab.emit_report(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
        return _dump({"written": args.output, "members": len(report.records)})
    return text


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammab", description="Grundy and b-chromatic number laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--g6", help="graph in graph6 format")
        src.add_argument("--file", help="edge-list file: first line n, then 'u v' lines")
        src.add_argument("--family", help='family spec such as "B:4", "cat:10x3", "tree:8:seed=42"')
        sp.add_argument("--cap", type=int, default=None, help=f"solver vertex cap (default ${lab.CAP_ENV} or {lab.DEFAULT_CAP})")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("gen", cmd_gen, "emit a graph")
    sp.add_argument("--format", choices=["json", "graph6", "edge-list"], default="json")
    sp = graph_cmd("gamma", cmd_gamma, "Grundy number with a First-Fit witness ordering")
    sp.add_argument("--oracle", action="store_true", help=f"try every ordering (n <= {grundy.ORACLE_MAX_N})")
    graph_cmd("bnum", cmd_bnum, "b-chromatic number with a witness b-coloring")
    graph_cmd("m", cmd_m, "m(G) from the degree sequence")
    graph_cmd("chi", cmd_chi, "chromatic number")
    graph_cmd("omega", cmd_omega, "clique number")
    for name, func, help_text in (
        ("eliminate", cmd_eliminate, "reduce a proper coloring to a b-coloring by dissolving undominated classes"),
        ("check-grundy", cmd_check_grundy, "validate a Grundy coloring"),
        ("check-bcoloring", cmd_check_bcoloring, "validate a b-coloring"),
    ):
        sp = graph_cmd(name, func, help_text)
        sp.add_argument("--coloring", required=True, help="comma-separated colors, one per vertex")
    sp = graph_cmd("forb", cmd_forb, "induced-subgraph containment / Forb(H) membership")
    sp.add_argument("--pattern", action="append", required=True,
                    help='pattern as a family spec ("path:6", "Kst:2,2") or "g6:<graph6>"; repeatable')
    sp = graph_cmd("monotone", cmd_monotone, "b-monotonicity verdict")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="enumerate all induced subgraphs (default)")
    mode.add_argument("--sample", nargs=2, type=int, metavar=("TRIALS", "SEED"), help="random subsets")
    graph_cmd("profile", cmd_profile, "all invariants of one graph")

    sp = sub.add_parser("sweep", help="profile a family over a parameter range")
    sp.add_argument("--family", required=True, help='family kind, e.g. "B", "R", "cat", "tree:seed=3"')
    sp.add_argument("--range", required=True, help="parameter range such as 2..6 (caterpillars: s = l)")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--output", help="write the report here instead of stdout")
    sp.add_argument("--cap", type=int, default=None)
    sp.set_defaults(func=cmd_sweep)
    return p


def run(argv: list[str]) -> tuple[int, str]:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        g = None if args.command == "sweep" else _load(args)
        return 0, args.func(args, g)
    except UsageError as exc:
        print(f"gammab: usage error: {exc}", file=sys.stderr)
        return 2, ""
    except GraphError as exc:
        print(f"gammab: error: {exc}", file=sys.stderr)
        return 1, ""


def main(argv: list[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
