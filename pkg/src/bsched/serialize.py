"""JSON file formats with exact rational strings.

Rationals travel as strings ("7/10" or "3"), never as floats, so values
survive the wire exactly. Job indices in files are 1-based; the library uses
0-based indices internally.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import Instance, ScheduleTrace
from .errors import ValidationError
from .reduction import PartitionInstance, ReductionImage

_RATIONAL_RE = re.compile(r"(-?\d+)(?:/(\d+))?")


def parse_rational(text, field: str | None = None) -> Fraction:
    """Parse "p/q" or an integer literal string into an exact Fraction."""
    if not isinstance(text, str):
        raise ValidationError(f"rational values must be strings, got {text!r}", field)
    match = _RATIONAL_RE.fullmatch(text.strip())
    if not match:
        raise ValidationError(f"invalid rational literal {text!r}", field)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValidationError("denominator must be positive", field)
    return Fraction(numerator, denominator)


def format_rational(value) -> str:
    return str(Fraction(value))


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON for {what}: {exc}") from exc


def _require_keys(data: dict, keys: set[str], what: str) -> None:
    if not isinstance(data, dict):
        raise ValidationError(f"{what} must be a JSON object")
    missing = keys - data.keys()
    if missing:
        raise ValidationError(f"{what} is missing keys: {sorted(missing)}")
    unknown = data.keys() - keys
    if unknown:
        raise ValidationError(f"{what} has unknown keys: {sorted(unknown)}")


def instance_from_dict(data: dict) -> Instance:
    _require_keys(data, {"b", "window", "jobs"}, "instance")
    b = data["b"]
    if not isinstance(b, int) or isinstance(b, bool):
        raise ValidationError("b must be an integer", field="b")
    window = parse_rational(data["window"], field="window")
    if not isinstance(data["jobs"], list):
        raise ValidationError("jobs must be a list of rational strings", field="jobs")
    jobs = tuple(
        parse_rational(s, field=f"jobs[{i}]") for i, s in enumerate(data["jobs"])
    )
    return Instance(b=b, jobs=jobs, window=window)


def instance_to_dict(instance: Instance) -> dict:
    return {
        "b": instance.b,
        "window": format_rational(instance.window),
        "jobs": [format_rational(s) for s in instance.jobs],
    }


def parse_instance(text: str) -> Instance:
    return instance_from_dict(_load_json(text, "instance"))


def emit_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def partition_from_dict(data: dict) -> PartitionInstance:
    _require_keys(data, {"values"}, "partition instance")
    values = data["values"]
    if not isinstance(values, list):
        raise ValidationError("values must be a list of integers", field="values")
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValidationError(
                f"values must be integers, got {v!r}", field=f"values[{i}]"
            )
    return PartitionInstance(values=tuple(values))


def partition_to_dict(part: PartitionInstance) -> dict:
    return {"values": list(part.values)}


def parse_partition(text: str) -> PartitionInstance:
    return partition_from_dict(_load_json(text, "partition instance"))


def emit_partition(part: PartitionInstance) -> str:
    return json.dumps(partition_to_dict(part), indent=2) + "\n"


def trace_from_dict(data: dict) -> ScheduleTrace:
    _require_keys(
        data, {"order", "starts", "completions", "gaps", "makespan"}, "trace"
    )
    order = data["order"]
    if not isinstance(order, list) or any(
        not isinstance(i, int) or isinstance(i, bool) for i in order
    ):
        raise ValidationError("order must be a list of 1-based integers", field="order")

    def times(key: str) -> tuple[Fraction, ...]:
        seq = data[key]
        if not isinstance(seq, list):
            raise ValidationError(f"{key} must be a list of rational strings", field=key)
        return tuple(
            parse_rational(s, field=f"{key}[{i}]") for i, s in enumerate(seq)
        )

    return ScheduleTrace(
        order=tuple(i - 1 for i in order),
        starts=times("starts"),
        completions=times("completions"),
        gaps=times("gaps"),
        makespan=parse_rational(data["makespan"], field="makespan"),
    )


def trace_to_dict(trace: ScheduleTrace) -> dict:
    return {
        "order": [i + 1 for i in trace.order],
        "starts": [format_rational(t) for t in trace.starts],
        "completions": [format_rational(t) for t in trace.completions],
        "gaps": [format_rational(t) for t in trace.gaps],
        "makespan": format_rational(trace.makespan),
    }


def parse_trace(text: str) -> ScheduleTrace:
    return trace_from_dict(_load_json(text, "trace"))


def emit_trace(trace: ScheduleTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2) + "\n"


def reduction_to_dict(image: ReductionImage) -> dict:
    return {
        "instance": instance_to_dict(image.instance),
        "threshold": format_rational(image.threshold),
        "u": format_rational(image.u),
    }


def emit_reduction(image: ReductionImage) -> str:
    return json.dumps(reduction_to_dict(image), indent=2) + "\n"
