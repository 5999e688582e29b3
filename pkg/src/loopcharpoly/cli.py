"""Command line front end.

Usage:
    loopcharpoly charpoly GRAPH [--method sachs|loop-expansion|figure-form|vertex-deletion|oracle]
    loopcharpoly verify [GRAPH] [--random COUNT] [--orderings K]
    loopcharpoly cayley N [--anticirculant] [--emit-graph PATH] [--spectrum] [--verify]
    loopcharpoly basic-figures GRAPH [--order K]
    loopcharpoly roots GRAPH [--tolerance TOL]

Global flags (before or after the command): --json, --seed S, --force.

Exit codes: 0 ok, 1 methods disagree / verification failed, 2 bad input,
3 size cap exceeded, 4 numeric root check failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter

import numpy as np

from . import cayley
from .graph import GraphError, GraphParseError, Pseudograph, read_graph
from .oracle import adjacency_matrix, charpoly_oracle
from .polynomial import IntPolynomial, render
from .sachs import SizeCapExceeded, check_cap, enumerate_basic_figures
from .verify import METHODS, compute, random_suite, run_all

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP, EXIT_NUMERIC = 0, 1, 2, 3, 4

CAYLEY_MAX_N = 10**4
SACHS_LEAF_MAX_N = 13


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _load(path: str) -> Pseudograph:
    try:
        with open(path) as fh:
            return read_graph(fh)
    except GraphParseError as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from None
    except OSError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else text)


# -- commands ------------------------------------------------------------

def cmd_charpoly(args) -> int:
    g = _load(args.graph)
    poly = compute(g, args.method, force=args.force)
    _emit(args, render(poly),
          {"n": g.order, "coeffs": poly.to_json_coeffs(), "method": args.method})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.graph:
        graphs = [_load(args.graph)]
    elif args.random:
        graphs = random_suite(args.random, args.seed)
    else:
        raise CliError(EXIT_INPUT, "verify needs a graph file or --random COUNT")
    rng = random.Random(args.seed)
    status = EXIT_OK
    results = []
    for g in graphs:
        check_cap(g, args.force)
        orders = []
        for _ in range(max(args.orderings, 1)):
            vs = list(range(g.order))
            if args.orderings > 1:
                rng.shuffle(vs)
            orders.append(vs)
        report = run_all(g, orders, force=args.force)
        if not report.agree:
            status = EXIT_MISMATCH
        results.append(report)
    if args.json:
        print(json.dumps([r.as_dict() for r in results] if len(results) > 1
                         else results[0].as_dict()))
        return status
    for idx, report in enumerate(results):
        if len(results) > 1:
            print(f"# instance {idx} (order {report.order})")
        width = max(len(k) for k in report.polynomials)
        for name, poly in report.polynomials.items():
            print(f"{name:<{width}}  {render(poly)}")
        bad = report.first_disagreement()
        if bad is None:
            print("agreement: all methods identical")
        else:
            print(f"DISAGREEMENT: {bad[0]} vs {bad[1]} at x^{bad[2]}")
    return status


def cmd_cayley(args) -> int:
    n = args.n
    if n < 1:
        raise CliError(EXIT_INPUT, "n must be a positive integer")
    if n >= CAYLEY_MAX_N and not args.force:
        raise CliError(EXIT_CAP, f"n={n} exceeds the closed-form cap {CAYLEY_MAX_N}")
    if args.anticirculant:
        graph = cayley.build_anticirculant_graph(n)
        poly = cayley.charpoly_anticirculant(n)
        method = "anticirculant-closed-form"
    else:
        graph = cayley.build_unitary_cayley(n)
        # odd n needs one exact leaf polynomial per unit; the figure DP is
        # exponential, so larger n switch to the modular Hessenberg route
        leaf = "sachs" if n <= SACHS_LEAF_MAX_N else "hessenberg"
        poly = cayley.charpoly_cayley(n, leaf)
        method = "cayley-closed-form"
    payload: dict = {"n": n, "coeffs": poly.to_json_coeffs(), "method": method}
    lines = [render(poly)]
    status = EXIT_OK
    if args.emit_graph:
        with open(args.emit_graph, "w") as fh:
            fh.write(graph.to_text())
        payload["graph_file"] = args.emit_graph
    if args.spectrum:
        rep = cayley.spectrum_report(n)
        payload["spectrum"] = rep.as_dict()
        lines.append(f"lambda_0 = {rep.lambda_0}")
        if rep.lambda_half is not None:
            lines.append(f"lambda_{n // 2} = {rep.lambda_half}")
        for r, a in enumerate(rep.abs_lambdas, 1):
            lines.append(f"|lambda_{r}| = {a}")
    if args.verify:
        ok = charpoly_oracle(graph) == poly
        payload["verified"] = ok
        lines.append("verify: OK" if ok else "verify: MISMATCH")
        if not ok:
            status = EXIT_MISMATCH
    _emit(args, "\n".join(lines), payload)
    return status


def cmd_basic_figures(args) -> int:
    g = _load(args.graph)
    check_cap(g, args.force)
    max_order = args.order
    table: dict[int, Counter] = {}
    for f in enumerate_basic_figures(g, max_order, force=True):
        if args.order is not None and f.order != args.order:
            continue
        shape = (len(f.edge_components), f.cycles, len(f.loop_components))
        table.setdefault(f.order, Counter())[shape] += 1
    orders = sorted(table) if args.order is None else [args.order]
    payload = {"n": g.order, "orders": {}}
    lines = ["order  edges  cycles  loops  count"]
    for k in orders:
        shapes = table.get(k, Counter())
        payload["orders"][str(k)] = {
            "total": sum(shapes.values()),
            "shapes": [
                {"edges": e, "cycles": c, "loops": lp, "count": cnt}
                for (e, c, lp), cnt in sorted(shapes.items())
            ],
        }
        for (e, c, lp), cnt in sorted(shapes.items()):
            lines.append(f"{k:>5}  {e:>5}  {c:>6}  {lp:>5}  {cnt:>5}")
        lines.append(f"{k:>5}  total{'':>16}{sum(shapes.values()):>5}")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def real_roots(g: Pseudograph, poly: IntPolynomial, tolerance: float) -> list[float]:
    """Eigenvalues of the symmetric adjacency matrix (LAPACK ``eigvalsh``),
    accepted only if each leaves a small residual in the exact polynomial."""
    if g.order == 0:
        return []
    a = np.array(adjacency_matrix(g), dtype=float)
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise CliError(EXIT_NUMERIC, f"eigensolver did not converge: {exc}") from None
    coeffs = [float(c) for c in poly.coeffs]
    for r in vals:
        resid = abs(sum(c * r**i for i, c in enumerate(coeffs)))
        scale = sum(abs(c) * abs(r) ** i for i, c in enumerate(coeffs))
        if resid > tolerance * max(scale, 1.0):
            raise CliError(EXIT_NUMERIC, f"root {r:.6f} fails residual check ({resid:.3g})")
    return [float(v) for v in vals]


def cmd_roots(args) -> int:
    g = _load(args.graph)
    poly = charpoly_oracle(g)
    roots = [0.0 if abs(r) < 5e-7 else r for r in real_roots(g, poly, args.tolerance)]
    _emit(args, "\n".join(f"{r:.6f}" for r in roots),
          {"n": g.order, "coeffs": poly.to_json_coeffs(), "method": "oracle",
           "roots": [round(r, 6) for r in roots]})
    return EXIT_OK


# -- parser --------------------------------------------------------------

def _common(sub_default: bool) -> argparse.ArgumentParser:
    # sub-parsers use SUPPRESS so they do not overwrite flags given before the command
    d = argparse.SUPPRESS if sub_default else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d or False,
                   help="machine-readable output")
    p.add_argument("--seed", type=int, default=d or 0, help="seed for random sweeps")
    p.add_argument("--force", action="store_true", default=d or False,
                   help="ignore size caps")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopcharpoly",
        description="Exact characteristic polynomials of graphs with loops.",
        parents=[_common(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="sachs")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", parents=[common], help="cross-check all methods")
    p.add_argument("graph", nargs="?")
    p.add_argument("--random", type=int, metavar="COUNT",
                   help="check COUNT seeded random pseudographs instead")
    p.add_argument("--orderings", type=int, default=1,
                   help="random vertex orderings for vertex deletion")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cayley", parents=[common], help="unitary addition Cayley graphs")
    p.add_argument("n", type=int)
    p.add_argument("--anticirculant", action="store_true")
    p.add_argument("--emit-graph", metavar="PATH")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("basic-figures", parents=[common], help="basic figure counts")
    p.add_argument("graph")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_basic_figures)

    p = sub.add_parser("roots", parents=[common], help="numeric eigenvalues")
    p.add_argument("graph")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.set_defaults(func=cmd_roots)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
