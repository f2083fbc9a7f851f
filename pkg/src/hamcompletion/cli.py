"""``hamc`` command-line front end.

Exit codes: 0 ok, 2 parse error, 3 unsupported, 4 internal validation
failure, 5 invalid plan, 6 oracle budget exceeded, 7 unsatisfiable request.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caterpillar import CaterpillarSpec, build_graph, classify
from .closed_form import delta_from_lambda, graph_leaf_count, lambda_closed_form, lambda_lower_bound, lemma_lower_bound_01
from .construct import AugmentationPlan, check_plan, construct
from .errors import BudgetExceeded, ParseError, TooSmallForCycle, UnsupportedClass, ValidationFailure
from .generate import CONSTRAINTS, SplitMix64, Unsatisfiable, random_spec
from .graph import Graph, parse_edge_list
from .oracle import DEFAULT_BUDGET, min_cycle_augmentation, min_path_augmentation
from .sweep import FAMILIES, family_specs, sweep_row, to_csv

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4
EXIT_INVALID_PLAN = 5
EXIT_BUDGET = 6
EXIT_UNSATISFIABLE = 7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc


def _load_spec(path: str) -> CaterpillarSpec:
    try:
        return CaterpillarSpec.from_json(_read(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _load_graph(path: str) -> Graph:
    try:
        return parse_edge_list(_read(path))
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _load_plan(path: str) -> AugmentationPlan:
    try:
        return AugmentationPlan.from_dict(json.loads(_read(path)))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"{path}: malformed plan: {exc}", EXIT_PARSE) from exc


def _range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        v = int(text)
        return v, v
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_input(args) -> Graph:
    if args.graph:
        return _load_graph(args.graph)
    if args.spec:
        return build_graph(_load_spec(args.spec))[0]
    raise CliError("one of --graph or --spec is required", EXIT_PARSE)


def cmd_compute(args) -> int:
    spec = _load_spec(args.spec)
    label = classify(spec)
    lines = [f"spec: {spec}", f"class: {label}", f"vertices: {spec.vertex_count}"]
    try:
        res = lambda_closed_form(spec)
    except TooSmallForCycle:
        lines.append("lambda: TooSmallForCycle")
        res = None
    else:
        if res is None:
            lines.append("lambda: Unsupported")
        else:
            lines.append(f"lambda: {res.value}")
            lines.append(f"formula: {res.formula_name.value}")
            lines.append(f"delta: {delta_from_lambda(res.value, False)}")
    lines.append(f"leaf_lower_bound: {lambda_lower_bound(graph_leaf_count(spec))}")
    lines.append(f"pendant_lower_bound: {lemma_lower_bound_01(spec)}")
    _emit("\n".join(lines) + "\n", None)
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _load_spec(args.spec)
    try:
        plan = construct(spec)
    except (UnsupportedClass, TooSmallForCycle) as exc:
        raise CliError(f"unsupported: {exc}", EXIT_UNSUPPORTED) from exc
    except ValidationFailure as exc:
        raise CliError(f"internal validation failure: {exc}", EXIT_INTERNAL) from exc
    g, _ = build_graph(spec)
    if check_plan(g, plan.added_edges, plan.witness_cycle):
        raise CliError("internal validation failure", EXIT_INTERNAL)
    _emit(plan.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph_input(args)
    plan = _load_plan(args.plan)
    problems = check_plan(g, plan.added_edges, plan.witness_cycle)
    if problems:
        print("INVALID: " + "; ".join(problems))
        return EXIT_INVALID_PLAN
    print(f"VALID, {len(plan.added_edges)} edges added")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _graph_input(args)
    try:
        if args.target == "path":
            res = min_path_augmentation(g, args.budget, workers=args.workers)
        else:
            res = min_cycle_augmentation(g, args.budget, workers=args.workers)
    except TooSmallForCycle as exc:
        raise CliError(str(exc), EXIT_UNSUPPORTED) from exc
    except BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_BUDGET) from exc
    if args.out:
        _emit(json.dumps(res.to_dict()) + "\n", args.out)
    print(f"minimum: {res.minimum}")
    print("optimal_edges: " + " ".join(f"{e.u}-{e.v}" for e in res.optimal_edges))
    print("witness: " + " ".join(map(str, res.witness)))
    return EXIT_OK


def cmd_compare(args) -> int:
    lo, hi = args.range
    specs = family_specs(
        args.family, lo, hi, k=args.k, seed=args.seed, count=args.count,
        n_range=args.n_range, l_range=args.l_range,
    )
    rows = [
        sweep_row(s, use_oracle=not args.no_oracle, max_oracle_vertices=args.max_vertices,
                  budget=args.budget, workers=args.workers)
        for s in specs
    ]
    _emit(to_csv(rows), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec = random_spec(SplitMix64(args.seed), args.n_range, args.l_range, args.constraint)
    except Unsatisfiable as exc:
        raise CliError(f"unsatisfiable: {exc}", EXIT_UNSATISFIABLE) from exc
    _emit(spec.to_json() + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamc", description="Hamiltonian completion of caterpillars")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="closed-form value and bounds for a spec")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="build a completing edge set with witness cycle")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a plan against a graph")
    p.add_argument("--graph")
    p.add_argument("--spec")
    p.add_argument("--plan", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum by exhaustive search")
    p.add_argument("--graph")
    p.add_argument("--spec")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--target", choices=("cycle", "path"), default="cycle")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="formula vs oracle vs construction table")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--range", type=_range, default=(1, 4))
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n-range", type=_range, default=(1, 6))
    p.add_argument("--l-range", type=_range, default=(0, 3))
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="seeded random spec")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n-range", type=_range, default=(1, 6))
    p.add_argument("--l-range", type=_range, default=(0, 4))
    p.add_argument("--constraint", choices=CONSTRAINTS, default="any")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hamc: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
