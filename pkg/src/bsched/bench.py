"""Benchmark harness: run every solver over a suite and emit tables.

A suite file is a JSON object ``{"epsilons": [...], "instances": [...]}``
where each instance entry carries an ``id`` plus the usual instance fields.
The CSV output pairs every exact rational column with a 6-significant-digit
decimal rendering (presentation only, derived from the exact value). Wall
times are deliberately kept out of the CSV so that its bytes are
reproducible; they appear in the TSV companion table instead.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, evaluate_greedy, lower_bound
from .errors import InternalError, ValidationError
from .exact import DEFAULT_LIMIT, solve_exact
from .heuristics import lpt_schedule
from .ptas import PtasConfig, dp_solve, round_instance
from .serialize import _load_json, _require_keys, format_rational, instance_from_dict, parse_rational


@dataclass(frozen=True)
class PtasCell:
    """Approximation results for one (instance, epsilon) pair; None = skipped."""

    makespan: Fraction | None
    fstar: Fraction | None
    seconds: float


@dataclass(frozen=True)
class BenchRow:
    instance_id: str
    n: int
    b: int
    opt: Fraction
    lpt_makespan: Fraction
    lpt_ratio: Fraction | None
    bound: Fraction
    ptas: tuple[PtasCell, ...]
    opt_seconds: float
    lpt_seconds: float


def parse_suite(text: str) -> tuple[list[Fraction], list[tuple[str, Instance]]]:
    data = _load_json(text, "suite")
    _require_keys(data, {"epsilons", "instances"}, "suite")
    if not isinstance(data["epsilons"], list) or not isinstance(data["instances"], list):
        raise ValidationError("epsilons and instances must be lists")
    epsilons = [
        parse_rational(e, field=f"epsilons[{i}]") for i, e in enumerate(data["epsilons"])
    ]
    instances = []
    seen = set()
    for i, entry in enumerate(data["instances"]):
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ValidationError(
                "each instance entry needs a string id", field=f"instances[{i}]"
            )
        instance_id = entry["id"]
        if instance_id in seen:
            raise ValidationError(
                f"duplicate instance id {instance_id!r}", field=f"instances[{i}].id"
            )
        seen.add(instance_id)
        fields = {k: v for k, v in entry.items() if k != "id"}
        instances.append((instance_id, instance_from_dict(fields)))
    return epsilons, instances


def run_suite(
    epsilons: list[Fraction],
    instances: list[tuple[str, Instance]],
    limit: int = DEFAULT_LIMIT,
) -> list[BenchRow]:
    """Solve every instance exactly, with LPT, and with the scheme per epsilon.

    Two guarantees are asserted on every row (a violation is a bug, not a
    report entry): the optimum is at least the lower bound, and LPT respects
    its makespan guarantee.
    """
    rows = []
    for instance_id, instance in sorted(instances, key=lambda pair: pair[0]):
        t0 = time.perf_counter()
        exact = solve_exact(instance, limit=limit)
        opt_seconds = time.perf_counter() - t0

        t0 = time.perf_counter()
        lpt = lpt_schedule(instance)
        lpt_seconds = time.perf_counter() - t0

        bound = lower_bound(instance)
        if exact.optimum < bound:
            raise InternalError(
                f"row {instance_id}: optimum {exact.optimum} below bound {bound}"
            )
        guarantee = (2 - Fraction(2, instance.b)) * exact.optimum + instance.window
        if lpt.makespan > guarantee:
            raise InternalError(
                f"row {instance_id}: LPT makespan {lpt.makespan} breaks its guarantee"
            )
        ratio = lpt.makespan / exact.optimum if exact.optimum > 0 else None

        cells = []
        for eps in epsilons:
            if instance.window != 1 or instance.n < instance.b:
                cells.append(PtasCell(None, None, 0.0))
                continue
            t0 = time.perf_counter()
            cfg = PtasConfig(eps)
            solution = dp_solve(round_instance(instance, cfg), cfg)
            trace = evaluate_greedy(instance, solution.order)
            cells.append(
                PtasCell(trace.makespan, solution.optimum, time.perf_counter() - t0)
            )

        rows.append(
            BenchRow(
                instance_id=instance_id,
                n=instance.n,
                b=instance.b,
                opt=exact.optimum,
                lpt_makespan=lpt.makespan,
                lpt_ratio=ratio,
                bound=bound,
                ptas=tuple(cells),
                opt_seconds=opt_seconds,
                lpt_seconds=lpt_seconds,
            )
        )
    return rows


def _dec(value: Fraction | None) -> str:
    return "" if value is None else f"{float(value):.6g}"


def _exact(value: Fraction | None) -> str:
    return "" if value is None else format_rational(value)


def render_csv(epsilons: list[Fraction], rows: list[BenchRow]) -> str:
    header = [
        "id", "n", "b",
        "opt", "opt_dec",
        "lpt", "lpt_dec",
        "lpt_ratio", "lpt_ratio_dec",
        "lower_bound", "lower_bound_dec",
    ]
    for eps in epsilons:
        tag = format_rational(eps)
        header += [f"ptas[{tag}]", f"ptas_dec[{tag}]", f"fstar[{tag}]", f"fstar_dec[{tag}]"]

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        record = [
            row.instance_id, row.n, row.b,
            _exact(row.opt), _dec(row.opt),
            _exact(row.lpt_makespan), _dec(row.lpt_makespan),
            _exact(row.lpt_ratio), _dec(row.lpt_ratio),
            _exact(row.bound), _dec(row.bound),
        ]
        for cell in row.ptas:
            record += [
                _exact(cell.makespan), _dec(cell.makespan),
                _exact(cell.fstar), _dec(cell.fstar),
            ]
        writer.writerow(record)
    return out.getvalue()


def render_tsv(epsilons: list[Fraction], rows: list[BenchRow]) -> str:
    """Decimal-only table with wall-time columns, for plotting."""
    header = ["id", "n", "b", "opt", "lpt", "lpt_ratio", "lower_bound"]
    for eps in epsilons:
        tag = format_rational(eps)
        header += [f"ptas[{tag}]", f"fstar[{tag}]"]
    header += ["opt_seconds", "lpt_seconds"]
    header += [f"ptas_seconds[{format_rational(eps)}]" for eps in epsilons]

    lines = ["\t".join(header)]
    for row in rows:
        record = [
            row.instance_id, str(row.n), str(row.b),
            _dec(row.opt), _dec(row.lpt_makespan), _dec(row.lpt_ratio), _dec(row.bound),
        ]
        for cell in row.ptas:
            record += [_dec(cell.makespan), _dec(cell.fstar)]
        record += [f"{row.opt_seconds:.6f}", f"{row.lpt_seconds:.6f}"]
        record += [f"{cell.seconds:.6f}" for cell in row.ptas]
        lines.append("\t".join(record))
    return "\n".join(lines) + "\n"
