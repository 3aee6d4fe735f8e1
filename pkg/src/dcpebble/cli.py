"""Command-line interface.

Subcommands: compute, solve, verify, sweep, family.  Graphs come from
``--graph FILE`` (graph6 for ``.g6`` files, edge-list text otherwise) or as
graph6 lines on standard input.

Exit codes: 0 success; 1 unexpected error or failed verification; 2 sweep
found a proven-bound violation (suite failure); 3 sweep found a conjecture
violation only (a finding); 64 unusable input; 65 solver precondition not
met; 75 budget or size cap exhausted before a decision.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .constructive import (
    PreconditionError,
    solve_diameter2,
    solve_diameter_d,
    solve_subversion_diameter2,
    spread_diameter2,
    verify_certificate,
)
from .families import (
    FAMILY_KINDS,
    FamilySpec,
    generate,
    random_connected_graph,
)
from .graphs import (
    Graph,
    GraphError,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .harness import (
    emit_csv,
    emit_json,
    print_summary,
    run_sweep,
    sweep_exit_code,
)
from .pebbling import (
    DOMINATION,
    FULL_COVER,
    Certificate,
    Goal,
    PebblingError,
    format_configuration,
    parse_configuration,
    subversion,
)
from .solver import (
    DEFAULT_STATE_BUDGET,
    is_solvable,
    lambda_stacking,
    pebbling_value,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_FINDING = 3
EXIT_USAGE = 64
EXIT_PRECONDITION = 65
EXIT_BUDGET = 75


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_graph_lines(args) -> list[str]:
    if args.graph:
        path = Path(args.graph)
        try:
            text = path.read_text()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from exc
        if path.suffix == ".g6":
            return [ln.strip() for ln in text.splitlines() if ln.strip()]
        return [emit_graph6(_parse(parse_edge_list, text))]
    lines = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
    if not lines:
        raise CliError("no graph input on stdin and no --graph given")
    return lines


def _parse(fn, text):
    try:
        return fn(text)
    except GraphError as exc:
        raise CliError(str(exc)) from exc


def _single_graph(args) -> Graph:
    lines = _read_graph_lines(args)
    if len(lines) != 1:
        raise CliError(
            f"expected exactly one graph, got {len(lines)} (use sweep for streams)")
    return _parse(parse_graph6, lines[0])


def _goal_from(args) -> Goal:
    name = getattr(args, "goal", "dcp") or "dcp"
    if name == "dcp":
        return DOMINATION
    if name == "cover":
        return FULL_COVER
    if name == "subversion":
        if args.omega is None:
            raise CliError("--goal subversion requires --omega")
        return subversion(args.omega)
    raise CliError(f"unknown goal {name!r}")


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _cmd_compute(args) -> int:
    g = _single_graph(args)
    if args.quantity == "lambda" and not args.brute:
        report = lambda_stacking(g)
    else:
        if args.quantity == "psi":
            goal = DOMINATION
        elif args.quantity == "lambda":
            goal = FULL_COVER
        else:
            if args.omega is None:
                raise CliError("compute omega requires --omega")
            goal = subversion(args.omega)
        report = pebbling_value(g, goal, cap=args.cap, budget=args.budget)

    name = {"psi": "psi", "lambda": "lambda", "omega": f"omega_{args.omega}"}[
        args.quantity]
    if report.status == "exact":
        print(f"{name} = {report.value}")
    else:
        reason = "budget exhausted" if report.status == "budget" else "size cap reached"
        print(f"{name} >= {report.value} ({reason}; value is a lower bound)")
    if report.witness is not None:
        print(f"witness = {format_configuration(report.witness)}")
    print(f"configurations checked = {report.checked}")
    return EXIT_OK if report.status == "exact" else EXIT_BUDGET


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def _cmd_solve(args) -> int:
    g = _single_graph(args)
    try:
        config = parse_configuration(args.config, g.n)
    except PebblingError as exc:
        raise CliError(str(exc)) from exc

    if args.algorithm == "oracle":
        goal = _goal_from(args)
        result = is_solvable(g, config, goal,
                             budget=args.budget or DEFAULT_STATE_BUDGET)
        print(f"states explored = {result.states_explored}")
        if result.unknown:
            print("verdict: unknown (state budget exhausted)")
            return EXIT_BUDGET
        if not result.solvable:
            print("verdict: unsolvable")
            return EXIT_OK
        cert = result.certificate
    else:
        goal = DOMINATION
        try:
            if args.algorithm == "diam2":
                cert = solve_diameter2(g, config)
            elif args.algorithm == "spread":
                cert = spread_diameter2(g, config)
            elif args.algorithm == "diamd":
                cert = solve_diameter_d(
                    g, config, check_invariants=not args.skip_invariants)
            elif args.algorithm == "subversion":
                if args.omega is None:
                    raise CliError("solve subversion requires --omega")
                goal = subversion(args.omega)
                cert = solve_subversion_diameter2(g, config, args.omega)
            else:
                raise CliError(f"unknown algorithm {args.algorithm!r}")
        except PreconditionError as exc:
            print(f"precondition failed: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION

    verdict = verify_certificate(g, cert, goal)
    print(cert.to_json())
    print(f"moves = {len(cert.moves)}")
    print(f"verdict: solvable ({'verified' if verdict.ok else 'VERIFIER REJECTED'})")
    return EXIT_OK if verdict.ok else EXIT_ERROR


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    g = _single_graph(args)
    if args.certificate == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.certificate).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {args.certificate}: {exc}") from exc
    try:
        cert = Certificate.from_json(text)
    except PebblingError as exc:
        raise CliError(str(exc)) from exc
    goal = _goal_from(args)
    result = verify_certificate(g, cert, goal)
    if result.ok:
        print(f"valid: final configuration "
              f"{format_configuration(result.final)} meets {goal.describe()}")
        return EXIT_OK
    if result.failed_step is not None:
        print(f"invalid: illegal move at step {result.failed_step}")
    else:
        print(f"invalid: {result.reason}")
    return EXIT_ERROR


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _cmd_sweep(args) -> int:
    lines = _read_graph_lines(args)
    omegas = tuple(int(tok) for tok in args.omega.split(",")) if args.omega else ()
    records, summary = run_sweep(
        lines, omegas=omegas, budget=args.budget,
        cross_check_lambda=args.cross_check_lambda,
        jobs=args.jobs, timing=args.timing)
    if args.format == "json":
        text = emit_json(records, summary, omegas)
    else:
        text = emit_csv(records, omegas)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    print_summary(summary)
    return sweep_exit_code(summary)


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------

def _emit_graphs(graphs: list[Graph], fmt: str) -> None:
    for g in graphs:
        if fmt == "edgelist":
            sys.stdout.write(emit_edge_list(g))
            sys.stdout.write("\n")
        else:
            print(emit_graph6(g))


def _cmd_family(args) -> int:
    if args.kind == "random":
        if args.order is None:
            raise CliError("family random requires --order")
        rng = random.Random(args.seed)
        dia = None
        if args.diameter:
            parts = args.diameter.split(":")
            lo = int(parts[0])
            hi = int(parts[1]) if len(parts) > 1 else lo
            dia = (lo, hi)
        graphs = [random_connected_graph(args.order, rng, diameter_range=dia)
                  for _ in range(args.count)]
        _emit_graphs(graphs, args.format)
        return EXIT_OK
    try:
        g = generate(FamilySpec(args.kind, tuple(args.params)))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit_graphs([g], args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcpebble",
        description="Exact domination cover pebbling computations, "
                    "constructive solvers with certificates, and bound sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_opt(p):
        p.add_argument("--graph", metavar="FILE",
                       help="graph file (.g6 graph6, otherwise edge list); "
                            "default: graph6 lines on stdin")

    p = sub.add_parser("compute", help="exact pebbling value of one graph")
    p.add_argument("quantity", choices=["psi", "lambda", "omega"])
    add_graph_opt(p)
    p.add_argument("--omega", type=int, help="omega for the subversion number")
    p.add_argument("--budget", type=int,
                   help="max configurations examined before giving up")
    p.add_argument("--cap", type=int,
                   help="size cap for the ascending scan (default: proven bound)")
    p.add_argument("--brute", action="store_true",
                   help="compute lambda by brute force instead of stacking")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("solve", help="solve one configuration, emit certificate")
    p.add_argument("algorithm",
                   choices=["oracle", "diam2", "spread", "diamd", "subversion"])
    p.add_argument("--config", required=True,
                   help="comma-separated pebble counts, e.g. 5,0,0,0")
    add_graph_opt(p)
    p.add_argument("--goal", choices=["dcp", "cover", "subversion"],
                   default="dcp", help="goal for the oracle (default dcp)")
    p.add_argument("--omega", type=int)
    p.add_argument("--budget", type=int,
                   help="oracle state budget (default 10^7)")
    p.add_argument("--skip-invariants", action="store_true",
                   help="disable the diameter-d solver's invariant checks")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="replay and check a certificate")
    p.add_argument("--certificate", required=True, metavar="FILE",
                   help="certificate JSON file, or - for stdin")
    add_graph_opt(p)
    p.add_argument("--goal", choices=["dcp", "cover", "subversion"],
                   default="dcp")
    p.add_argument("--omega", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="verify bounds over a graph6 stream")
    add_graph_opt(p)
    p.add_argument("--omega", metavar="LIST",
                   help="comma-separated omegas to evaluate, e.g. 1,2")
    p.add_argument("--budget", type=int,
                   help="per-quantity configuration budget; exhaustion marks "
                        "the record unknown")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", metavar="FILE", help="write report here instead of stdout")
    p.add_argument("--cross-check-lambda", action="store_true",
                   help="also brute-force lambda and compare with stacking")
    p.add_argument("--timing", action="store_true",
                   help="include per-graph wall-clock seconds (non-deterministic)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("family", help="emit a named family graph")
    p.add_argument("kind", choices=list(FAMILY_KINDS) + ["random"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    p.add_argument("--order", type=int, help="order for random graphs")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--diameter", metavar="LO[:HI]",
                   help="diameter constraint for random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, PebblingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
