"""Equal-cardinality equal-sum partition, encoded as a scheduling instance.

Given ``2m`` positive integers, asking for a split into two m-element halves
of equal sum is equivalent to asking whether a specific scheduling instance
(the "image") reaches makespan ``(m + 2) * U``, where ``U`` is half the total.
The image uses ``b = 2``, window length ``U``, and ``2m + 3`` jobs: the values
themselves, two zero-jobs, and one job of length ``U``. The makespan of the
image never goes below the threshold, and it reaches it exactly when the
split exists; both directions are constructive and implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import Instance, ScheduleTrace, check_feasible, evaluate_greedy
from .errors import InternalError, ValidationError
from .exact import DEFAULT_LIMIT, solve_exact


@dataclass(frozen=True)
class PartitionInstance:
    """A multiset of ``2m`` positive integers to be split into equal halves.

    An odd total sum is allowed here (the decision is then trivially no);
    :func:`build_reduction` is the point that insists on an even sum.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) < 2 or len(values) % 2 != 0:
            raise ValidationError(
                f"need an even number (>= 2) of values, got {len(values)}",
                field="values",
            )
        for i, v in enumerate(values):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValidationError(
                    f"values must be integers >= 1, got {v!r}", field=f"values[{i}]"
                )
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return len(self.values) // 2

    @property
    def total(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class ReductionImage:
    """The scheduling instance encoding a partition question.

    ``instance.jobs`` is ``(a_1, ..., a_2m, 0, 0, U)`` with ``b = 2`` and
    window ``U``; ``threshold`` is the decision makespan ``(m + 2) * U``.
    """

    instance: Instance
    threshold: Fraction
    u: Fraction


def _zero_indices(part: PartitionInstance) -> tuple[int, int]:
    return 2 * part.m, 2 * part.m + 1


def _ujob_index(part: PartitionInstance) -> int:
    return 2 * part.m + 2


def build_reduction(part: PartitionInstance) -> ReductionImage:
    """Build the scheduling image of a partition instance (even sum required)."""
    if part.total % 2 != 0:
        raise ValidationError(
            "total sum is odd, no equal-sum split exists and no image is built",
            field="values",
        )
    u = part.total // 2
    jobs = tuple(Fraction(v) for v in part.values) + (
        Fraction(0),
        Fraction(0),
        Fraction(u),
    )
    instance = Instance(b=2, jobs=jobs, window=Fraction(u))
    return ReductionImage(
        instance=instance, threshold=Fraction((part.m + 2) * u), u=Fraction(u)
    )


def _check_sides(
    part: PartitionInstance, side1: Iterable[int], side2: Iterable[int]
) -> tuple[list[int], list[int]]:
    s1, s2 = list(side1), list(side2)
    m = part.m
    if sorted(s1 + s2) != list(range(2 * m)) or len(s1) != m or len(s2) != m:
        raise ValidationError(
            "side1 and side2 must partition the value indices into two halves "
            f"of size {m}"
        )
    if sum(part.values[i] for i in s1) != sum(part.values[i] for i in s2):
        raise ValidationError("side1 and side2 must have equal value sums")
    return s1, s2


def build_witness_schedule(
    part: PartitionInstance, side1: Iterable[int], side2: Iterable[int]
) -> ScheduleTrace:
    """The explicit threshold-makespan schedule certifying a valid split.

    ``side1`` and ``side2`` are 0-based index sets into ``part.values`` with
    equal cardinality ``m`` and equal sums. The schedule opens with a
    zero-job, interleaves side1 in nonincreasing and side2 in nondecreasing
    value order, then closes with the long job and the other zero-job. Its
    makespan is exactly the threshold ``(m + 2) * U``.
    """
    s1, s2 = _check_sides(part, side1, side2)
    image = build_reduction(part)
    s1.sort(key=lambda i: (-part.values[i], i))
    s2.sort(key=lambda i: (part.values[i], i))
    interleaved: list[int] = []
    for a, c in zip(s1, s2):
        interleaved.extend((a, c))
    zero_a, zero_b = _zero_indices(part)
    order = (zero_a, *interleaved, _ujob_index(part), zero_b)
    trace = evaluate_greedy(image.instance, order)
    if trace.makespan != image.threshold:
        raise InternalError(
            "witness schedule missed the threshold makespan; this is a bug"
        )
    return trace


def decide_partition(part: PartitionInstance, limit: int = DEFAULT_LIMIT) -> bool:
    """Does an equal-cardinality equal-sum split exist?

    Odd totals are an immediate no. Otherwise the image is solved exactly
    and the answer is whether its optimum meets the threshold.
    """
    if part.total % 2 != 0:
        return False
    image = build_reduction(part)
    result = solve_exact(image.instance, limit=limit)
    return result.optimum <= image.threshold


def extract_partition(
    part: PartitionInstance, trace: ScheduleTrace
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover a valid split from a threshold-makespan schedule of the image.

    The trace must be a feasible schedule of the reduction image with
    makespan exactly the threshold. If the two zero-jobs are not already at
    the two ends, they are swapped there and the order re-placed greedily
    (which cannot raise the makespan above the threshold). Alternating
    positions of the remaining sequence then carry the two sides. The slot
    playing the long-job role is the highest-index job of length ``U`` among
    the odd positions; when that role is filled by one of the original
    values (possible when some value equals ``U``), the actual long job
    stands in for that value on the other side.

    Returns the two sides as ascending tuples of 0-based value indices.
    """
    image = build_reduction(part)
    if trace.makespan != image.threshold:
        raise ValidationError(
            f"trace makespan {trace.makespan} differs from the threshold "
            f"{image.threshold}; only threshold schedules encode a split"
        )
    if not check_feasible(image.instance, trace):
        raise ValidationError("trace is not a feasible schedule of the image")

    zero_a, zero_b = _zero_indices(part)
    ujob = _ujob_index(part)
    order = list(trace.order)
    ends = {order[0], order[-1]}
    if ends != {zero_a, zero_b}:
        for zero, position in ((zero_a, 0), (zero_b, len(order) - 1)):
            at = order.index(zero)
            order[position], order[at] = order[at], order[position]
        normalized = evaluate_greedy(image.instance, tuple(order))
        if normalized.makespan != image.threshold:
            raise InternalError(
                "moving the zero-jobs to the ends changed the makespan; this is a bug"
            )

    middle = order[1:-1]
    odd_slots = middle[0::2]
    even_slots = middle[1::2]
    u_candidates = [j for j in odd_slots if image.instance.jobs[j] == image.u]
    if not u_candidates:
        raise InternalError(
            "no job of length U sits at an odd position of a threshold schedule; "
            "this is a bug"
        )
    role = max(u_candidates)
    side1 = [j for j in odd_slots if j != role]
    side2 = [role if j == ujob else j for j in even_slots]

    m, u = part.m, part.total // 2
    if (
        len(side1) != m
        or len(side2) != m
        or any(j >= 2 * m for j in side1 + side2)
        or sum(part.values[j] for j in side1) != u
        or sum(part.values[j] for j in side2) != u
    ):
        raise InternalError(
            "extracted sides fail the cardinality or sum check; this is a bug"
        )
    return tuple(sorted(side1)), tuple(sorted(side2))
