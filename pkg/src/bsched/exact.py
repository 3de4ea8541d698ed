"""Exact optimal makespan by permutation search.

Two entry points: :func:`solve_exact` prunes the search, and
:func:`solve_exact_unpruned` enumerates every permutation. The pruned solver
exploits two facts. First, some optimal permutation puts the two jobs of
smallest execution time at the two ends, and since the window rule is
symmetric under time reversal we may fix the smallest job first and the
second smallest last without losing the optimal value. Second, greedy
completion times only grow as jobs are appended, so a partial schedule whose
last completion already reaches the incumbent can be abandoned.

Both solvers work on an integer grid (all sizes and the window scaled by a
common denominator), which keeps the arithmetic exact and fast; results are
converted back to Fractions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, ScheduleTrace, evaluate_greedy
from .errors import LimitExceededError

DEFAULT_LIMIT = 12
DEFAULT_UNPRUNED_LIMIT = 9


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact solve.

    ``explored`` counts the permutations whose makespan was fully evaluated
    (pruned branches are not counted). It is deterministic for a given
    instance; the witness is the first optimal order the enumeration meets.
    """

    optimum: Fraction
    witness: ScheduleTrace
    explored: int


def _scaled(instance: Instance) -> tuple[list[int], int]:
    """Job sizes and window as integers on a common-denominator grid."""
    denom = math.lcm(
        instance.window.denominator, *(s.denominator for s in instance.jobs)
    )
    jobs = [int(s * denom) for s in instance.jobs]
    return jobs, int(instance.window * denom)


def _check_limit(instance: Instance, limit: int, name: str) -> None:
    if instance.n > limit:
        raise LimitExceededError(
            f"{name} refuses instances with more than {limit} jobs (got {instance.n}); "
            "raise the limit explicitly if you accept the factorial cost"
        )


def solve_exact(instance: Instance, limit: int = DEFAULT_LIMIT) -> ExactResult:
    """Minimum greedy makespan over all permutations, with pruning.

    The two smallest jobs (ties broken by lowest index) are fixed at the two
    ends; the jobs in between are enumerated in lexicographic index order
    with the incumbent cut described in the module docstring. The pruning
    never changes the returned optimum.
    """
    _check_limit(instance, limit, "solve_exact")
    n, b = instance.n, instance.b
    jobs, window = _scaled(instance)

    if n == 1:
        trace = evaluate_greedy(instance, (0,))
        return ExactResult(trace.makespan, trace, 1)

    ranked = sorted(range(n), key=lambda i: (jobs[i], i))
    first, last = ranked[0], ranked[1]
    middle = [i for i in range(n) if i != first and i != last]

    best_mk: int | None = None
    best_order: list[int] | None = None
    explored = 0
    completions = [jobs[first]]
    chosen: list[int] = []
    used = [False] * n

    def step(size: int) -> int:
        i = len(completions)
        if i < b:
            return completions[-1] + size
        return max(completions[i - b] + window, completions[-1]) + size

    def dfs() -> None:
        nonlocal best_mk, best_order, explored
        if len(chosen) == len(middle):
            mk = step(jobs[last])
            explored += 1
            if best_mk is None or mk < best_mk:
                best_mk = mk
                best_order = [first, *chosen, last]
            return
        for j in middle:
            if used[j]:
                continue
            c = step(jobs[j])
            if best_mk is not None and c >= best_mk:
                continue  # later completions can only be >= c
            used[j] = True
            chosen.append(j)
            completions.append(c)
            dfs()
            completions.pop()
            chosen.pop()
            used[j] = False

    dfs()
    assert best_order is not None
    witness = evaluate_greedy(instance, tuple(best_order))
    return ExactResult(witness.makespan, witness, explored)


def solve_exact_unpruned(
    instance: Instance, limit: int = DEFAULT_UNPRUNED_LIMIT
) -> ExactResult:
    """Minimum greedy makespan by evaluating every one of the n! permutations.

    Exists to validate the pruned solver; ``explored`` equals n!.
    """
    _check_limit(instance, limit, "solve_exact_unpruned")
    n, b = instance.n, instance.b
    jobs, window = _scaled(instance)

    best_mk: int | None = None
    best_order: tuple[int, ...] | None = None
    explored = 0
    for perm in itertools.permutations(range(n)):
        completions: list[int] = []
        for i, j in enumerate(perm):
            if i == 0:
                c = jobs[j]
            elif i < b:
                c = completions[-1] + jobs[j]
            else:
                c = max(completions[i - b] + window, completions[-1]) + jobs[j]
            completions.append(c)
        explored += 1
        mk = completions[-1]
        if best_mk is None or mk < best_mk:
            best_mk = mk
            best_order = perm

    assert best_order is not None
    witness = evaluate_greedy(instance, best_order)
    return ExactResult(witness.makespan, witness, explored)
