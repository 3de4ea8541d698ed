"""Shared generators and independent brute-force oracles for the tests.

The oracles deliberately use plain enumeration (with only provably safe
cuts) and stay structurally unrelated to the implementations they check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from bsched import Instance, ScheduleTrace, trace_from_gaps


def rand_instance(rng, n, b, denom=20, zero_prob=0.2, window=1, spread=1) -> Instance:
    """Random instance with sizes in [0, spread] on a 1/denom grid."""
    jobs = []
    for _ in range(n):
        if rng.random() < zero_prob:
            jobs.append(Fraction(0))
        else:
            jobs.append(Fraction(rng.randint(0, spread * denom), denom))
    return Instance(b=b, jobs=tuple(jobs), window=Fraction(window))


def rand_trace(rng, instance, denom=8) -> ScheduleTrace:
    order = list(range(instance.n))
    rng.shuffle(order)
    gaps = tuple(
        Fraction(rng.randint(0, 2 * denom), denom) for _ in range(instance.n - 1)
    )
    return trace_from_gaps(instance, tuple(order), gaps)


def split_exists(values) -> bool:
    """Direct search over all equal-cardinality splits."""
    return find_split(values) is not None


def find_split(values):
    """One equal-cardinality equal-sum split as (side1, side2), or None.

    Index 0 is pinned to side1, which covers every split exactly once.
    """
    n = len(values)
    m = n // 2
    total = sum(values)
    if total % 2 != 0:
        return None
    half = total // 2
    for rest in itertools.combinations(range(1, n), m - 1):
        side1 = (0,) + rest
        if sum(values[i] for i in side1) == half:
            side2 = tuple(i for i in range(n) if i not in side1)
            return side1, side2
    return None


def regular_minimum(sizes, b, ladder) -> Fraction:
    """Minimum makespan over every ordering of ``sizes`` with every interior
    idle drawn from ``ladder`` (the gap before the first slot is 0).

    Enumerates orderings and idle vectors outright; the only cuts are an
    incumbent bound (all remaining idles at the ladder minimum cannot beat
    the best total) and windows that are already infeasible.
    """
    n = len(sizes)
    eps = ladder[0]
    size_sum = sum(sizes)
    best_idle = None

    for perm in sorted(set(itertools.permutations(sizes))):
        idles: list[Fraction] = []

        def rec(idle_sum):
            nonlocal best_idle
            k = len(idles)
            remaining = (n - 1) - k
            if best_idle is not None and idle_sum + remaining * eps >= best_idle:
                return
            if k == n - 1:
                best_idle = idle_sum
                return
            for u in ladder:
                idles.append(u)
                i = k - b + 1  # the window whose last idle was just fixed
                ok = True
                if 0 <= i <= n - b - 1:
                    total = idles[i]
                    for j in range(i + 1, i + b):
                        total += perm[j] + idles[j]
                    if total < 1:
                        ok = False
                if ok:
                    rec(idle_sum + u)
                idles.pop()

        rec(Fraction(0))

    assert best_idle is not None
    return size_sum + best_idle
