"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors, 2 on usage errors. Errors go
to stderr as single-line JSON; primary results go to stdout and are
byte-reproducible for fixed arguments and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import parse_suite, render_csv, render_tsv, run_suite
from .core import check_feasible, evaluate_greedy
from .errors import SchedulingError, ValidationError
from .exact import DEFAULT_LIMIT, solve_exact
from .generate import gen_partition, gen_random
from .heuristics import lpt_schedule
from .ptas import PtasConfig, dp_solve, round_instance
from .reduction import build_reduction, decide_partition
from .serialize import (
    emit_instance,
    emit_partition,
    emit_reduction,
    format_rational,
    parse_instance,
    parse_partition,
    parse_rational,
    trace_to_dict,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2) with plain text
        raise _UsageError(message)


def _read(path: str, what: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {what} file {path}: {exc}")


def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        indices = [int(token) for token in text.split(",")]
    except ValueError:
        raise ValidationError(
            f"permutation must be comma-separated 1-based indices, got {text!r}",
            field="perm",
        )
    return tuple(i - 1 for i in indices)


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_eval(args) -> int:
    instance = parse_instance(_read(args.instance, "instance"))
    trace = evaluate_greedy(instance, _parse_perm(args.perm))
    _print_json({"trace": trace_to_dict(trace), "feasible": check_feasible(instance, trace)})
    return 0


def _cmd_opt(args) -> int:
    instance = parse_instance(_read(args.instance, "instance"))
    result = solve_exact(instance, limit=args.limit)
    _print_json(
        {
            "optimum": format_rational(result.optimum),
            "explored": result.explored,
            "witness": trace_to_dict(result.witness),
        }
    )
    return 0


def _cmd_lpt(args) -> int:
    instance = parse_instance(_read(args.instance, "instance"))
    trace = lpt_schedule(instance)
    _print_json({"makespan": format_rational(trace.makespan), "trace": trace_to_dict(trace)})
    return 0


def _cmd_ptas(args) -> int:
    instance = parse_instance(_read(args.instance, "instance"))
    cfg = PtasConfig(parse_rational(args.epsilon, field="--epsilon"))
    solution = dp_solve(round_instance(instance, cfg), cfg)
    trace = evaluate_greedy(instance, solution.order)
    _print_json(
        {
            "epsilon": format_rational(cfg.epsilon),
            "fstar": format_rational(solution.optimum),
            "makespan": format_rational(trace.makespan),
            "trace": trace_to_dict(trace),
        }
    )
    return 0


def _cmd_reduce(args) -> int:
    part = parse_partition(_read(args.partition, "partition"))
    print(emit_reduction(build_reduction(part)), end="")
    return 0


def _cmd_decide(args) -> int:
    part = parse_partition(_read(args.partition, "partition"))
    print("YES" if decide_partition(part, limit=args.limit) else "NO")
    return 0


def _cmd_gen(args) -> int:
    instance = gen_random(args.n, args.b, args.seed, args.zero_fraction)
    print(emit_instance(instance), end="")
    return 0


def _cmd_genpart(args) -> int:
    part = gen_partition(args.m, args.max_value, args.seed)
    print(emit_partition(part), end="")
    return 0


def _cmd_bench(args) -> int:
    epsilons, instances = parse_suite(_read(args.suite, "suite"))
    rows = run_suite(epsilons, instances, limit=args.limit)
    print(render_csv(epsilons, rows), end="")
    tsv_path = Path(args.suite).with_suffix(".tsv")
    tsv_path.write_text(render_tsv(epsilons, rows))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="bsched", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="greedily place a given permutation")
    p.add_argument("instance", help="instance JSON file")
    p.add_argument("perm", help="comma-separated 1-based job indices, e.g. 2,1,3")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("opt", help="exact optimal makespan")
    p.add_argument("instance")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(handler=_cmd_opt)

    p = sub.add_parser("lpt", help="longest-processing-time schedule")
    p.add_argument("instance")
    p.set_defaults(handler=_cmd_lpt)

    p = sub.add_parser("ptas", help="rounding + DP approximation scheme")
    p.add_argument("instance")
    p.add_argument("--epsilon", required=True, help="accuracy, an exact rational like 1/4")
    p.set_defaults(handler=_cmd_ptas)

    p = sub.add_parser("reduce", help="emit the scheduling image of a partition input")
    p.add_argument("partition", help="partition JSON file")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("decide", help="YES/NO equal-cardinality equal-sum partition")
    p.add_argument("partition")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-fraction", type=float, default=0.0, dest="zero_fraction")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("genpart", help="generate a random partition input")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-value", type=int, default=9, dest="max_value")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_genpart)

    p = sub.add_parser("bench", help="run the benchmark suite (CSV to stdout, TSV sidecar)")
    p.add_argument("--suite", required=True, help="suite JSON file")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(handler=_cmd_bench)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help prints and exits
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except SchedulingError as exc:
        payload = {"error": str(exc)}
        if exc.field is not None:
            payload["field"] = exc.field
        print(json.dumps(payload), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
