"""Domain types, greedy placement, feasibility checks, and lower bounds.

The model: ``n`` jobs run sequentially on one processor. Job ``i`` needs a
half-open interval of length ``jobs[i]`` (length 0 is legal, such a job
occupies a single time point and several of them may share it). The schedule
must respect the window rule: no half-open window ``[x, x + W)`` may
intersect more than ``b`` jobs, for any real ``x``.

Every time quantity is an exact :class:`fractions.Fraction`; nothing in this
module rounds. Floats are rejected at the boundary so inexactness cannot
sneak in. All types are immutable and all operations are pure functions, so
everything here is safe to use from multiple threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError

#: Exact nonnegative rational time quantity.
TimeValue = Fraction


def _coerce_time(value, field: str | None = None) -> Fraction:
    """Convert ``value`` to an exact Fraction, rejecting floats outright."""
    if isinstance(value, float):
        raise ValidationError(
            f"floats are not exact, pass a Fraction, int or 'p/q' string: {value!r}",
            field=field,
        )
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational value: {value!r}", field=field) from exc


@dataclass(frozen=True)
class Instance:
    """A scheduling instance: job lengths, the job cap ``b``, window length.

    ``b`` is the maximum number of jobs any window of length ``window`` may
    intersect. Job lengths may be zero and may exceed ``window``.
    """

    b: int
    jobs: tuple[Fraction, ...]
    window: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.b, int) or isinstance(self.b, bool):
            raise ValidationError("b must be an integer", field="b")
        if self.b < 2:
            raise ValidationError("b must be >= 2", field="b")
        window = _coerce_time(self.window, field="window")
        if window <= 0:
            raise ValidationError("window must be > 0", field="window")
        jobs = tuple(
            _coerce_time(s, field=f"jobs[{i}]") for i, s in enumerate(self.jobs)
        )
        if not jobs:
            raise ValidationError("an instance needs at least one job", field="jobs")
        for i, s in enumerate(jobs):
            if s < 0:
                raise ValidationError("execution times must be >= 0", field=f"jobs[{i}]")
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "jobs", jobs)

    @property
    def n(self) -> int:
        return len(self.jobs)


@dataclass(frozen=True)
class ScheduleTrace:
    """A concrete schedule: a job order plus start/completion times and gaps.

    ``order[i]`` is the job index scheduled in slot ``i`` (0-based).
    ``gaps[i]`` is the idle time between slots ``i`` and ``i + 1``; there are
    ``n - 1`` of them. Construct traces through :func:`evaluate_greedy` or
    :func:`trace_from_gaps`; consistency is verified by the feasibility
    checkers, not on construction.
    """

    order: tuple[int, ...]
    starts: tuple[Fraction, ...]
    completions: tuple[Fraction, ...]
    gaps: tuple[Fraction, ...]
    makespan: Fraction


def validate_permutation(n: int, order: Sequence[int]) -> tuple[int, ...]:
    """Check that ``order`` is a bijection on ``0..n-1`` and return it as a tuple."""
    perm = tuple(order)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValidationError(
            f"order must be a permutation of 0..{n - 1}, got {list(order)!r}",
            field="order",
        )
    return perm


def evaluate_greedy(instance: Instance, order: Sequence[int]) -> ScheduleTrace:
    """Place the jobs of ``order`` as early as the window rule permits.

    The first job starts at time 0. Slots ``1..b-1`` run back to back. From
    slot ``b`` on, a job may not start before ``completions[i - b] + window``
    (the earliest moment the window sliding off job ``i - b`` frees a slot),
    nor before the previous completion.
    """
    perm = validate_permutation(instance.n, order)
    b, window = instance.b, instance.window
    sizes = [instance.jobs[j] for j in perm]
    completions: list[Fraction] = []
    starts: list[Fraction] = []
    for i, size in enumerate(sizes):
        if i == 0:
            start = Fraction(0)
        elif i < b:
            start = completions[i - 1]
        else:
            start = max(completions[i - b] + window, completions[i - 1])
        starts.append(start)
        completions.append(start + size)
    gaps = tuple(starts[i + 1] - completions[i] for i in range(len(perm) - 1))
    return ScheduleTrace(
        order=perm,
        starts=tuple(starts),
        completions=tuple(completions),
        gaps=gaps,
        makespan=completions[-1],
    )


def trace_from_gaps(
    instance: Instance, order: Sequence[int], gaps: Sequence
) -> ScheduleTrace:
    """Build the trace that schedules ``order`` with the given idle gaps.

    The first job starts at 0; each later job starts when the previous one
    completes plus its gap. Gaps must be nonnegative; feasibility is not
    checked here.
    """
    perm = validate_permutation(instance.n, order)
    gap_values = tuple(_coerce_time(g, field=f"gaps[{i}]") for i, g in enumerate(gaps))
    if len(gap_values) != instance.n - 1:
        raise ValidationError(
            f"expected {instance.n - 1} gaps, got {len(gap_values)}", field="gaps"
        )
    for i, g in enumerate(gap_values):
        if g < 0:
            raise ValidationError("gaps must be >= 0", field=f"gaps[{i}]")
    starts: list[Fraction] = [Fraction(0)]
    completions: list[Fraction] = [instance.jobs[perm[0]]]
    for i, g in enumerate(gap_values):
        start = completions[i] + g
        starts.append(start)
        completions.append(start + instance.jobs[perm[i + 1]])
    return ScheduleTrace(
        order=perm,
        starts=tuple(starts),
        completions=tuple(completions),
        gaps=gap_values,
        makespan=completions[-1],
    )


def _validate_trace(instance: Instance, trace: ScheduleTrace) -> None:
    """Raise unless ``trace`` is internally consistent for ``instance``."""
    perm = validate_permutation(instance.n, trace.order)
    n = instance.n
    if len(trace.starts) != n or len(trace.completions) != n:
        raise ValidationError("starts/completions must have one entry per job")
    if len(trace.gaps) != n - 1:
        raise ValidationError(f"expected {n - 1} gaps, got {len(trace.gaps)}")
    if trace.starts[0] != 0:
        raise ValidationError("the first job must start at time 0", field="starts[0]")
    for i in range(n):
        if trace.completions[i] != trace.starts[i] + instance.jobs[perm[i]]:
            raise ValidationError(
                "completion does not equal start plus execution time",
                field=f"completions[{i}]",
            )
    for i in range(n - 1):
        if trace.gaps[i] < 0:
            raise ValidationError("gaps must be >= 0", field=f"gaps[{i}]")
        if trace.starts[i + 1] != trace.completions[i] + trace.gaps[i]:
            raise ValidationError(
                "start does not equal previous completion plus gap",
                field=f"starts[{i + 1}]",
            )
    if trace.makespan != trace.completions[-1]:
        raise ValidationError("makespan must equal the last completion", field="makespan")


def check_feasible(instance: Instance, trace: ScheduleTrace) -> bool:
    """Window rule via gap sums: slots ``i`` and ``i + b`` must be >= W apart.

    For every slot ``i`` with a slot ``i + b`` after it, the elapsed time from
    the completion of slot ``i`` to the start of slot ``i + b`` (its gap plus
    the sizes and gaps between) must reach the window length. Raises if the
    trace is internally inconsistent.
    """
    _validate_trace(instance, trace)
    n, b = instance.n, instance.b
    sizes = [instance.jobs[j] for j in trace.order]
    for i in range(n - b):
        total = trace.gaps[i]
        for j in range(i + 1, i + b):
            total += sizes[j] + trace.gaps[j]
        if total < instance.window:
            return False
    return True


def check_feasible_geometric(instance: Instance, trace: ScheduleTrace) -> bool:
    """Window rule checked directly: slide ``[x, x + W)`` over the timeline.

    A positive job occupying ``[s, c)`` intersects the window iff
    ``s < x + W`` and ``x < c``; a zero-length job at point ``t`` intersects
    iff ``x <= t < x + W``. The intersection count only changes at finitely
    many positions, so it suffices to evaluate it at every event point
    (each completion, each start, each start minus W, and 0) plus the
    midpoint of every pair of consecutive event points, which samples the
    open stretches in between. Windows starting left of 0 never beat the
    window at 0.
    """
    _validate_trace(instance, trace)
    w = instance.window
    jobs = []
    for i, j in enumerate(trace.order):
        size = instance.jobs[j]
        jobs.append((trace.starts[i], trace.completions[i], size == 0))

    events = {Fraction(0)}
    for start, completion, _ in jobs:
        events.add(completion)
        events.add(start)
        if start - w >= 0:
            events.add(start - w)
    points = sorted(events)
    candidates = list(points)
    for a, c in zip(points, points[1:]):
        candidates.append((a + c) / 2)

    for x in candidates:
        count = 0
        for start, completion, is_zero in jobs:
            if is_zero:
                if x <= start < x + w:
                    count += 1
            elif start < x + w and x < completion:
                count += 1
        if count > instance.b:
            return False
    return True


def lower_bound(instance: Instance) -> Fraction:
    """A makespan lower bound valid for every feasible schedule.

    Total work is always a bound. When ``n > b``, slots ``i`` and ``i + b``
    sit at least a window apart, which forces at least ``W * (n - b) / b``
    elapsed time regardless of the job sizes.
    """
    total = sum(instance.jobs, Fraction(0))
    if instance.n > instance.b:
        return max(total, instance.window * (instance.n - instance.b) / instance.b)
    return total


def check_prefix_dominance(x_seq: Sequence, y_seq: Sequence) -> bool:
    """True iff every prefix sum of ``x_seq`` is <= the matching one of ``y_seq``."""
    xs = [_coerce_time(v, field=f"x_seq[{i}]") for i, v in enumerate(x_seq)]
    ys = [_coerce_time(v, field=f"y_seq[{i}]") for i, v in enumerate(y_seq)]
    if len(xs) != len(ys) or not xs:
        raise ValidationError(
            f"sequences must have equal nonzero length, got {len(xs)} and {len(ys)}"
        )
    sum_x = Fraction(0)
    sum_y = Fraction(0)
    for x, y in zip(xs, ys):
        sum_x += x
        sum_y += y
        if sum_x > sum_y:
            return False
    return True
