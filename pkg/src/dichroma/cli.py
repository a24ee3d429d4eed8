"""Command-line interface: ``dichroma <subcommand> ...``.

Exit status: 0 on success, 1 when the answer is negative (infeasible, invalid
coloring, not a cactus forest), 2 on usage or input-format errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import io
from .cwdp import dump_sigsets, extract_coloring, run_dp
from .digraph import is_valid_acyclic_coloring
from .dot import to_dot
from .estimator import solve_digraph
from .exceptions import (
    DichromaError,
    ExceededError,
    InfeasibleOrPartialSolution,
    InvalidColoringError,
    NotACactusError,
    SignatureCapExceeded,
)
from .expr import eval_cw, eval_dico, format_cw, format_dico, parse_cw, parse_dico
from .expr.dico import leaf_names
from .families import cactus_color, classify, cograph_clique_number, cograph_dcn
from .generators import gen_random_cactus, gen_random_cw_expr, gen_random_digraph, gen_random_dico_expr
from .ilp import export_lp
from .oracle import brute_force_dcn

NEGATIVE = (ExceededError, NotACactusError, InvalidColoringError, InfeasibleOrPartialSolution,
            SignatureCapExceeded)


def _emit(fields: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(fields, sort_keys=False))
        return
    for key, value in fields.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, (list, tuple)):
            value = " ".join(map(str, value))
        print(f"{key}: {value}")


def _write_outputs(args, g, coloring, names=None) -> None:
    if getattr(args, "witness", None):
        io.write_col(coloring, args.witness)
    if getattr(args, "dot", None):
        Path(args.dot).write_text(to_dot(g, coloring, names))


def cmd_solve(args) -> int:
    g = io.read_dg(args.graph)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        chi, coloring, used = solve_digraph(g, args.strategy)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _write_outputs(args, g, coloring)
    _emit({"dichromatic_number": chi, "strategy": used}, args.json)
    return 0


def cmd_solve_cw(args) -> int:
    e = parse_cw(Path(args.expr).read_text())
    trace = run_dp(e, args.sig_cap)
    if args.dump_sigsets:
        Path(args.dump_sigsets).write_text(dump_sigsets(trace))
    best = min(trace.root.sigset.sorted(), key=len)
    coloring = extract_coloring(trace, best)
    lg = eval_cw(e)
    _write_outputs(args, lg.graph, coloring, lg.names)
    fields = {"dichromatic_number": len(best), "k": e.k, "n": lg.graph.n,
              "root_signatures": len(trace.root.sigset)}
    status = 0
    if args.r is not None:
        feasible = len(best) <= args.r
        fields["r"] = args.r
        fields["feasible"] = feasible
        status = 0 if feasible else 1
    _emit(fields, args.json)
    return status


def cmd_solve_cograph(args) -> int:
    e = parse_dico(Path(args.expr).read_text())
    chi, coloring = cograph_dcn(e)
    _write_outputs(args, eval_dico(e), coloring, leaf_names(e))
    fields = {"dichromatic_number": chi}
    if args.clique_number:
        fields["clique_number"] = cograph_clique_number(e)
    _emit(fields, args.json)
    return 0


def cmd_solve_cactus(args) -> int:
    g = io.read_dg(args.graph)
    chi, coloring = cactus_color(g)
    _write_outputs(args, g, coloring)
    _emit({"dichromatic_number": chi}, args.json)
    return 0


def cmd_brute(args) -> int:
    g = io.read_dg(args.graph)
    chi, coloring = brute_force_dcn(g, args.max_r)
    _write_outputs(args, g, coloring)
    _emit({"dichromatic_number": chi}, args.json)
    return 0


def cmd_check(args) -> int:
    g = io.read_dg(args.graph)
    coloring = io.read_col(args.coloring, g.n)
    res = is_valid_acyclic_coloring(g, coloring)
    fields = {"valid": res.valid, "colors": coloring.r}
    if not res.valid:
        fields["color"] = res.color
        fields["cycle"] = res.cycle
    _emit(fields, args.json)
    return 0 if res.valid else 1


def cmd_classify(args) -> int:
    _emit(classify(io.read_dg(args.graph)), args.json)
    return 0


def cmd_export_ilp(args) -> int:
    g = io.read_dg(args.graph)
    Path(args.out).write_text(export_lp(g))
    _emit({"n": g.n, "m": g.m, "out": args.out}, args.json)
    return 0


def cmd_gen(args) -> int:
    if args.kind == "digraph":
        text = io.format_dg(gen_random_digraph(args.n, args.p, args.seed))
    elif args.kind == "cactus":
        text = io.format_dg(gen_random_cactus(args.n, args.seed))
    elif args.kind == "cw-expr":
        text = format_cw(gen_random_cw_expr(args.k, args.n, args.seed)) + "\n"
    else:
        text = format_dico(gen_random_dico_expr(args.n, args.seed)) + "\n"
    Path(args.out).write_text(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dichroma", description="Exact dichromatic number solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="print JSON instead of key: value lines")
        return p

    def witness_opts(p):
        p.add_argument("--witness", metavar="OUT", help="write the coloring as a .col file")
        p.add_argument("--dot", metavar="OUT", help="write a color-annotated DOT file")

    p = add("solve", cmd_solve, "solve a .dg digraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--strategy", choices=["auto", "brute"], default="auto")
    witness_opts(p)

    p = add("solve-cw", cmd_solve_cw, "dynamic program over a .cwx clique-width expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--r", type=int, help="also decide whether r colors suffice")
    p.add_argument("--dump-sigsets", metavar="OUT", help="write every node's signature set")
    p.add_argument("--sig-cap", type=int, default=None, help="signature limit per node")
    witness_opts(p)

    p = add("solve-cograph", cmd_solve_cograph, "solve a .dce di-co-expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--clique-number", action="store_true")
    witness_opts(p)

    p = add("solve-cactus", cmd_solve_cactus, "solve a directed cactus forest")
    p.add_argument("--graph", required=True)
    witness_opts(p)

    p = add("brute", cmd_brute, "exhaustive search")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-r", type=int, default=None)
    witness_opts(p)

    p = add("check", cmd_check, "validate a coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)

    p = add("classify", cmd_classify, "report DAG / symmetric / cactus facts")
    p.add_argument("--graph", required=True)

    p = add("export-ilp", cmd_export_ilp, "write the integer program in LP format")
    p.add_argument("--graph", required=True)
    p.add_argument("--out", required=True)

    p = add("gen", cmd_gen, "write a random instance")
    p.add_argument("kind", choices=["digraph", "cactus", "cw-expr", "dico-expr"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NEGATIVE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DichromaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
