"""Geometric rounding plus a dynamic program over schedule tails.

The scheme runs in three stages, all for window length 1:

1. Round every execution time up onto the geometric ladder
   ``eps * (1 + eps)^k`` (anything at or below ``eps`` becomes ``eps``),
   leaving a bounded number of distinct size classes.
2. Restrict attention to "regular" schedules of the rounded jobs: the idle
   gap between consecutive jobs is also drawn from the ladder (the gap
   before the very first job stays 0). A dynamic program finds the exact
   optimal regular makespan ``f*``.
3. Re-place the optimal regular order greedily on the original sizes, which
   can only shrink the makespan, so the result is a feasible schedule of the
   original instance with makespan between the true optimum and ``f*``.

The DP state is the vector of per-class job counts of a prefix subproblem
together with the ladder positions of the last ``b`` (idle, size) pairs.
A state whose pair window violates the feasibility sum (all idles plus all
but the last size must reach 1) is a dead end, except for the ``b``-job base
states, whose window has no predecessor job to constrain. Peeling the last
job maps a state to its possible predecessors; memoization plus one stored
argmin per state makes the optimal order reconstructible. Internally every
ladder quantity lives on a common-denominator integer grid, so the whole DP
is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Instance, ScheduleTrace, _coerce_time, evaluate_greedy
from .errors import InternalError, ValidationError

_INF = float("inf")


@dataclass(frozen=True)
class PtasConfig:
    """Accuracy knob ``epsilon`` and the derived ladder depth ``tau``.

    ``tau`` is the smallest integer with ``(1 + eps)^tau >= 1/eps``, so the
    top ladder rung ``eps * (1 + eps)^tau`` always reaches 1.
    """

    epsilon: Fraction
    tau: int = field(init=False)

    def __post_init__(self):
        eps = _coerce_time(self.epsilon, field="epsilon")
        if not 0 < eps < 1:
            raise ValidationError(
                "epsilon must lie strictly between 0 and 1", field="epsilon"
            )
        object.__setattr__(self, "epsilon", eps)
        t = 1
        power = 1 + eps
        target = 1 / eps
        while power < target:
            t += 1
            power *= 1 + eps
        object.__setattr__(self, "tau", t)


def idle_ladder(cfg: PtasConfig) -> tuple[Fraction, ...]:
    """The geometric grid ``eps * (1 + eps)^k`` for ``k = 0..tau``, ascending."""
    eps = cfg.epsilon
    return tuple(eps * (1 + eps) ** k for k in range(cfg.tau + 1))


@dataclass(frozen=True)
class RoundedInstance:
    """The rounded jobs, grouped into size classes.

    ``classes`` holds the distinct rounded sizes ascending, ``counts[c]`` how
    many jobs landed in class ``c``, and ``origin[i]`` the class of original
    job ``i``.
    """

    b: int
    classes: tuple[Fraction, ...]
    counts: tuple[int, ...]
    origin: tuple[int, ...]

    def __post_init__(self):
        if list(self.classes) != sorted(set(self.classes)):
            raise ValidationError("classes must be distinct and ascending", field="classes")
        if len(self.counts) != len(self.classes) or any(k < 0 for k in self.counts):
            raise ValidationError("counts must align with classes", field="counts")
        if len(self.origin) != sum(self.counts) or any(
            not 0 <= c < len(self.classes) for c in self.origin
        ):
            raise ValidationError("origin must map each job to a class", field="origin")

    @property
    def n(self) -> int:
        return len(self.origin)


def _round_up(size: Fraction, eps: Fraction) -> Fraction:
    """Smallest ladder value >= size; sizes at or below eps become eps."""
    value = eps
    step = 1 + eps
    while value < size:
        value *= step
    return value


def round_instance(instance: Instance, cfg: PtasConfig) -> RoundedInstance:
    """Round every execution time up onto the ladder (window must equal 1)."""
    if instance.window != 1:
        raise ValidationError(
            "rounding is defined for window length 1; rescale the instance first",
            field="window",
        )
    rounded = [_round_up(s, cfg.epsilon) for s in instance.jobs]
    classes = tuple(sorted(set(rounded)))
    index = {v: c for c, v in enumerate(classes)}
    origin = tuple(index[v] for v in rounded)
    counts = [0] * len(classes)
    for c in origin:
        counts[c] += 1
    return RoundedInstance(
        b=instance.b, classes=classes, counts=tuple(counts), origin=origin
    )


@dataclass(frozen=True)
class DpSolution:
    """Optimal regular makespan plus one order and idle assignment attaining it.

    ``order`` lists original job indices; ``idles`` the ``n - 1`` ladder gaps
    between consecutive slots (the gap before the first slot is always 0).
    ``states`` is the number of memoized DP states, for complexity checks.
    """

    optimum: Fraction
    order: tuple[int, ...]
    idles: tuple[Fraction, ...]
    states: int


def dp_solve(rounded: RoundedInstance, cfg: PtasConfig) -> DpSolution:
    """Exact minimum makespan over regular schedules of the rounded jobs.

    Regular means: slot 1 starts at time 0 and every later slot is preceded
    by an idle gap drawn from the ladder, with every ``b + 1`` consecutive
    slots spread over at least one window length. Refuses ``n < b``.
    """
    n, b = rounded.n, rounded.b
    if n < b:
        raise ValidationError(f"need at least b={b} jobs, got {n}")

    ladder = idle_ladder(cfg)
    classes = rounded.classes
    denom = math.lcm(
        *(v.denominator for v in classes), *(v.denominator for v in ladder)
    )
    class_int = tuple(int(v * denom) for v in classes)
    # idle option 0 encodes the zero gap allowed only before the first slot
    idle_int = (0,) + tuple(int(v * denom) for v in ladder)
    idle_value = (Fraction(0),) + ladder
    threshold = denom
    num_classes = len(classes)
    full = rounded.counts

    # memo[(counts, window)] = (value, argmin (x, y) or None for base states)
    memo: dict = {}

    def head_sum(window) -> int:
        total = idle_int[window[-1][0]]
        for u, c in window[:-1]:
            total += idle_int[u] + class_int[c]
        return total

    def consistent(counts, window) -> bool:
        need: dict[int, int] = {}
        for _, c in window:
            need[c] = need.get(c, 0) + 1
            if counts[c] < need[c]:
                return False
        return True

    def solve(counts, window, total):
        key = (counts, window)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        if total == b:
            value = 0
            for u, c in window:
                value += idle_int[u] + class_int[c]
            memo[key] = (value, None)
            return value
        if head_sum(window) < threshold:
            memo[key] = (_INF, None)
            return _INF
        u_last, c_last = window[-1]
        if counts[c_last] <= 0:
            raise InternalError("inconsistent DP state reached; this is a bug")
        add = idle_int[u_last] + class_int[c_last]
        child_counts = tuple(
            k - 1 if c == c_last else k for c, k in enumerate(counts)
        )
        child_total = total - 1
        x_options = (0,) if child_total == b else range(1, len(idle_int))
        rest = window[:-1]
        best = _INF
        choice = None
        for x in x_options:
            for y in range(num_classes):
                new_window = ((x, y),) + rest
                if not consistent(child_counts, new_window):
                    continue
                sub = solve(child_counts, new_window, child_total)
                if sub + add < best:
                    best = sub + add
                    choice = (x, y)
        memo[key] = (best, choice)
        return best

    def final_windows():
        """All (idle, class) windows a complete schedule can end with."""
        for v in itertools.product(range(num_classes), repeat=b):
            mult: dict[int, int] = {}
            for c in v:
                mult[c] = mult.get(c, 0) + 1
            if n == b:
                if any(full[c] != mult.get(c, 0) for c in range(num_classes)):
                    continue
            elif any(full[c] < k for c, k in mult.items()):
                continue
            if n == b:
                idle_sets = [(0,)] + [range(1, len(idle_int))] * (b - 1)
            else:
                idle_sets = [range(1, len(idle_int))] * b
            for us in itertools.product(*idle_sets):
                yield tuple(zip(us, v))

    best = _INF
    best_window = None
    for window in final_windows():
        value = solve(full, window, n)
        if value < best:
            best = value
            best_window = window

    if best_window is None or best is _INF:
        raise InternalError("no regular schedule exists; this is a bug")

    # Walk the stored argmins back to the base state, peeling (idle, job)
    # pairs off the end of the schedule.
    counts, window = full, best_window
    tail: list[tuple[int, int]] = []
    while True:
        _, choice = memo[(counts, window)]
        if choice is None:
            break
        tail.append(window[-1])
        c_last = window[-1][1]
        counts = tuple(k - 1 if c == c_last else k for c, k in enumerate(counts))
        window = (choice,) + window[:-1]
    sequence = list(window) + list(reversed(tail))
    if sequence[0][0] != 0:
        raise InternalError("reconstructed schedule has a leading idle; this is a bug")

    by_class = [deque() for _ in classes]
    for i, c in enumerate(rounded.origin):
        by_class[c].append(i)
    order = tuple(by_class[c].popleft() for _, c in sequence)
    idles = tuple(idle_value[u] for u, _ in sequence[1:])
    return DpSolution(
        optimum=Fraction(best, denom), order=order, idles=idles, states=len(memo)
    )


def ptas_solve(instance: Instance, cfg: PtasConfig) -> ScheduleTrace:
    """Approximate schedule: round, solve the regular DP, re-place greedily.

    The returned trace is feasible for the original instance and its makespan
    lies between the true optimum and the DP value ``f*``.
    """
    rounded = round_instance(instance, cfg)
    solution = dp_solve(rounded, cfg)
    return evaluate_greedy(instance, solution.order)
