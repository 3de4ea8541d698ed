"""The longest-processing-time ordering and its guarantee check.

Scheduling jobs in nonincreasing size order is guaranteed to stay within
``(2 - 2/b) * optimum + W`` of the optimal makespan.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Instance, ScheduleTrace, evaluate_greedy


def lpt_permutation(instance: Instance) -> tuple[int, ...]:
    """Job indices sorted by nonincreasing size, ties by ascending index."""
    return tuple(sorted(range(instance.n), key=lambda i: (-instance.jobs[i], i)))


def lpt_schedule(instance: Instance) -> ScheduleTrace:
    """Greedy placement of the longest-processing-time order."""
    return evaluate_greedy(instance, lpt_permutation(instance))


def check_lpt_bound(instance: Instance, opt: Fraction) -> bool:
    """True iff the LPT makespan is <= (2 - 2/b) * opt + window.

    ``opt`` must be the exact optimal makespan (see :func:`bsched.exact.solve_exact`).
    """
    bound = (2 - Fraction(2, instance.b)) * opt + instance.window
    return lpt_schedule(instance).makespan <= bound
