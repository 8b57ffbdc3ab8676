"""Command-line interface.

Subcommands: order, verify, rn, solve, label, sweep.  Every command is a
thin adapter over the library; no labeling logic lives here.

Exit codes: 0 success, 1 semantic failure (invalid labeling, certification
mismatch), 2 usage or I/O error, 3 budget exhaustion.  Default solver
budgets come from RADIOHAMMING_NODE_BUDGET and RADIOHAMMING_TIME_BUDGET.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from .exceptional import (
    FormulaDomainError,
    labeling_233,
    ordering_22n,
    radio_number_formula,
)
from .graphs import GraphError, HammingGraph, Vertex, format_vertex, parse_graph
from .labeling import (
    LabelingError,
    read_labeling_csv,
    span_of_ordering,
    validate,
    verify_bijection,
    check_graceful,
    write_labeling_csv,
)
from .ordering import ConstructionError, build_blocks, build_ordering, construction_params
from .solver import SolverConfig, SolverError, solve

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SOLVER_VERTEX_LIMIT = 18  # sweep runs the exact solver up to this size


@dataclass
class GraphSpec:
    """Parsed "2x3x3"-style spec with factors sorted ascending."""

    text: str
    original: tuple[int, ...]
    sorted_sizes: tuple[int, ...]
    permutation: tuple[int, ...]  # original index of each sorted factor

    @property
    def was_permuted(self) -> bool:
        return self.original != self.sorted_sizes

    @property
    def sorted_text(self) -> str:
        return "x".join(str(s) for s in self.sorted_sizes)


def parse_spec(text: str) -> GraphSpec:
    g = parse_graph(text)
    tagged = sorted((s, i) for i, s in enumerate(g.factor_sizes))
    return GraphSpec(
        text=text,
        original=g.factor_sizes,
        sorted_sizes=tuple(s for s, _ in tagged),
        permutation=tuple(i for _, i in tagged),
    )


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{name} must be an integer, got {raw!r}") from None


def _env_float(name: str, fallback: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise GraphError(f"{name} must be a number, got {raw!r}") from None


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        symmetry_reduction=not getattr(args, "no_symmetry", False),
    )


def _add_budget_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--node-budget",
        type=int,
        default=_env_int("RADIOHAMMING_NODE_BUDGET", SolverConfig.node_budget),
        help="maximum search nodes before giving up",
    )
    parser.add_argument(
        "--time-budget",
        type=float,
        default=_env_float("RADIOHAMMING_TIME_BUDGET", SolverConfig.time_budget),
        help="maximum search seconds before giving up",
    )


@contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _print_json(payload: dict, out) -> None:
    json.dump(payload, out, indent=2)
    out.write("\n")


def _formula_sizes(spec: GraphSpec) -> tuple[int, int, int]:
    """Map a spec onto the closed-form formula's domain, or raise."""
    sizes = spec.sorted_sizes
    if sizes == (2, 2) or sizes == (1, 2, 2):
        return (2, 2, 1)
    if len(sizes) == 3 and sizes[0] >= 2:
        return sizes  # type: ignore[return-value]
    raise FormulaDomainError(
        f"spec {spec.text!r} is not a diameter-3 Hamming graph "
        "(need three factors >= 2, or the degenerate 2x2)"
    )


def cmd_order(args) -> int:
    spec = parse_spec(args.spec)
    if len(spec.original) != 3 or min(spec.original) < 2:
        print(
            f"error: ordering construction needs exactly three factors >= 2, "
            f"got {args.spec!r}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if spec.was_permuted:
        print(
            f"note: factors sorted to {spec.sorted_text} "
            f"(isomorphic to {args.spec})",
            file=sys.stderr,
        )
    n1, n2, n3 = spec.sorted_sizes
    g = HammingGraph(spec.sorted_sizes)
    params = construction_params(n1, n2, n3)
    blocks = build_blocks(params)
    ordering = [row for block in blocks for row in block.rows()]
    graceful = check_graceful(g, ordering).graceful
    if not graceful:
        print(
            f"warning: {spec.sorted_text} is exceptional; "
            "this ordering is a bijection but not graceful",
            file=sys.stderr,
        )
    with _open_output(args.output) as out:
        if args.format == "json":
            payload = {
                "spec": args.spec,
                "sorted_spec": spec.sorted_text,
                "vertex_count": len(ordering),
                "graceful": graceful,
            }
            if spec.was_permuted:
                payload["factor_permutation"] = list(spec.permutation)
            if args.blocks:
                payload["blocks"] = [
                    [format_vertex(v) for v in block.rows()] for block in blocks
                ]
            else:
                payload["ordering"] = [format_vertex(v) for v in ordering]
            _print_json(payload, out)
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["position", "vertex"])
            position = 0
            for block in blocks:
                if args.blocks and block.index > 1:
                    out.write(f"# block {block.index}\n")
                for v in block.rows():
                    position += 1
                    writer.writerow([position, format_vertex(v)])
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(args.spec)
    try:
        labeling = read_labeling_csv(args.labeling)
    except OSError as exc:
        print(f"error: cannot read {args.labeling!r}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = validate(g, labeling)
    _print_json(report.to_json(), sys.stdout)
    return EXIT_OK if report.valid else EXIT_SEMANTIC


def cmd_rn(args) -> int:
    spec = parse_spec(args.spec)
    sizes = _formula_sizes(spec)
    result = radio_number_formula(*sizes)
    payload = {
        "spec": args.spec,
        "normalized": "x".join(str(s) for s in sizes),
        "rn": result.value,
        "case": result.case_tag,
    }
    exit_code = EXIT_OK
    if args.certify:
        solved = solve(HammingGraph(spec.original), _solver_config(args))
        payload["solver_rn"] = solved.rn
        payload["solver_optimal"] = solved.optimal
        payload["nodes_explored"] = solved.nodes_explored
        if not solved.optimal:
            payload["certified"] = None
            exit_code = EXIT_BUDGET
        elif solved.rn != result.value:
            payload["certified"] = False
            exit_code = EXIT_SEMANTIC
        else:
            payload["certified"] = True
    _print_json(payload, sys.stdout)
    return exit_code


def cmd_solve(args) -> int:
    g = parse_graph(args.spec)
    result = solve(g, _solver_config(args))
    witness_path = args.witness_out or f"witness_{g}.csv"
    write_labeling_csv(witness_path, result.witness)
    payload = {
        "spec": args.spec,
        "rn": result.rn,
        "optimal": result.optimal,
        "witness_csv": witness_path,
        "nodes_explored": result.nodes_explored,
        "elapsed_seconds": round(result.elapsed, 6),
    }
    _print_json(payload, sys.stdout)
    return EXIT_OK if result.optimal else EXIT_BUDGET


def _constructive_labeling(spec: GraphSpec):
    """Constructive labeling for the sorted graph of the spec."""
    sizes = _formula_sizes(spec)
    g = HammingGraph(spec.sorted_sizes)
    trivial = sum(1 for s in spec.sorted_sizes if s == 1)

    def embed(v: Vertex) -> Vertex:
        return (1,) * trivial + v

    if sizes[:2] == (2, 2):
        order = [embed(v) for v in ordering_22n(sizes[2])]
        labeling, span = span_of_ordering(g, order)
    elif sizes == (2, 3, 3):
        labeling = labeling_233()
        span = 20
    else:
        order = build_ordering(*sizes)
        labeling, span = span_of_ordering(g, order)
    return g, labeling, span


def cmd_label(args) -> int:
    spec = parse_spec(args.spec)
    if spec.was_permuted:
        print(
            f"note: factors sorted to {spec.sorted_text} "
            f"(isomorphic to {args.spec})",
            file=sys.stderr,
        )
    g, labeling, span = _constructive_labeling(spec)
    with _open_output(args.output) as out:
        write_labeling_csv(out, labeling)
    exit_code = EXIT_OK
    if args.certify:
        solved = solve(g, _solver_config(args))
        if not solved.optimal:
            print(
                f"certification incomplete: solver budget exhausted at rn <= {solved.rn}",
                file=sys.stderr,
            )
            exit_code = EXIT_BUDGET
        elif solved.rn != span:
            print(
                f"certification FAILED: labeling span {span} "
                f"but exact radio number is {solved.rn}",
                file=sys.stderr,
            )
            exit_code = EXIT_SEMANTIC
        else:
            print(
                f"certified: span {span} equals the exact radio number",
                file=sys.stderr,
            )
    return exit_code


def cmd_sweep(args) -> int:
    lmax = args.lmax
    mmax = args.mmax if args.mmax is not None else lmax
    nmax = args.nmax if args.nmax is not None else mmax
    if min(lmax, mmax, nmax) < 2:
        print("error: sweep bounds must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    cfg = SolverConfig(node_budget=args.node_budget, time_budget=args.time_budget)
    failures = []
    budget_hit = False
    with _open_output(args.output) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["l", "m", "n", "vertices", "rn_formula", "case",
             "graceful", "construction_span", "solver_rn"]
        )
        for n1 in range(2, lmax + 1):
            for n2 in range(n1, mmax + 1):
                for n3 in range(n2, nmax + 1):
                    g = HammingGraph((n1, n2, n3))
                    formula = radio_number_formula(n1, n2, n3)
                    ordering = build_ordering(n1, n2, n3)
                    if not verify_bijection(g, ordering):
                        failures.append(f"{g}: construction is not a bijection")
                        continue
                    graceful = check_graceful(g, ordering).graceful
                    _, span = span_of_ordering(g, ordering)
                    expected_graceful = formula.case_tag == "graceful"
                    if graceful != expected_graceful:
                        failures.append(
                            f"{g}: graceful={graceful} but case={formula.case_tag}"
                        )
                    if graceful and span != formula.value:
                        failures.append(
                            f"{g}: graceful span {span} != formula {formula.value}"
                        )
                    solver_rn = ""
                    if g.vertex_count <= SOLVER_VERTEX_LIMIT:
                        solved = solve(g, cfg)
                        solver_rn = solved.rn
                        if not solved.optimal:
                            budget_hit = True
                        elif solved.rn != formula.value:
                            failures.append(
                                f"{g}: solver rn {solved.rn} != formula {formula.value}"
                            )
                    writer.writerow(
                        [n1, n2, n3, g.vertex_count, formula.value,
                         formula.case_tag, graceful, span, solver_rn]
                    )
    for line in failures:
        print(f"MISMATCH: {line}", file=sys.stderr)
    if failures:
        return EXIT_SEMANTIC
    if budget_hit:
        print("warning: solver budget exhausted on some instances", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radiohamming",
        description="Radio labelings and exact radio numbers of Hamming graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="emit the consecutive vertex ordering")
    p.add_argument("spec", help="graph spec, e.g. 3x3x6")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--blocks", action="store_true", help="group output by block")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p.set_defaults(handler=cmd_order)

    p = sub.add_parser("verify", help="validate a labeling CSV against a graph")
    p.add_argument("spec", help="graph spec, e.g. 2x3x3")
    p.add_argument("labeling", help="CSV file with header vertex,label")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("rn", help="closed-form radio number")
    p.add_argument("spec", help="graph spec, e.g. 2x2x7")
    p.add_argument("--certify", action="store_true", help="cross-check with the exact solver")
    _add_budget_args(p)
    p.set_defaults(handler=cmd_rn)

    p = sub.add_parser("solve", help="exact radio number by branch and bound")
    p.add_argument("spec", help="graph spec, e.g. 2x3x3")
    p.add_argument("--no-symmetry", action="store_true", help="disable symmetry reduction")
    p.add_argument("--witness-out", default=None, help="witness CSV path")
    _add_budget_args(p)
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("label", help="emit a constructive optimal labeling CSV")
    p.add_argument("spec", help="graph spec, e.g. 2x3x3")
    p.add_argument("--certify", action="store_true", help="cross-check with the exact solver")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    _add_budget_args(p)
    p.set_defaults(handler=cmd_label)

    p = sub.add_parser("sweep", help="tabulate radio numbers over a parameter box")
    p.add_argument("lmax", type=int, help="largest first factor")
    p.add_argument("mmax", type=int, nargs="?", default=None, help="largest second factor")
    p.add_argument("nmax", type=int, nargs="?", default=None, help="largest third factor")
    p.add_argument("-o", "--output", default=None, help="output CSV (default stdout)")
    _add_budget_args(p)
    p.set_defaults(handler=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (GraphError, ConstructionError, FormulaDomainError, LabelingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
