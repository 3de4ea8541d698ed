"""Seeded random generators for instances and partition inputs."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Instance
from .errors import ValidationError
from .reduction import PartitionInstance

_DENOMINATOR = 1000


def gen_random(n: int, b: int, seed: int, zero_fraction: float = 0.0) -> Instance:
    """A window-1 instance with n sizes drawn uniformly from {0/1000..1000/1000}.

    ``zero_fraction`` of the jobs (rounded to the nearest count) are forced
    to zero. Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValidationError("n must be >= 1", field="n")
    if b < 2:
        raise ValidationError("b must be >= 2", field="b")
    if not 0 <= zero_fraction <= 1:
        raise ValidationError("zero_fraction must lie in [0, 1]", field="zero_fraction")
    rng = random.Random(seed)
    jobs = [Fraction(rng.randint(0, _DENOMINATOR), _DENOMINATOR) for _ in range(n)]
    forced = int(round(zero_fraction * n))
    for i in rng.sample(range(n), forced):
        jobs[i] = Fraction(0)
    return Instance(b=b, jobs=tuple(jobs), window=Fraction(1))


def gen_partition(m: int, max_value: int, seed: int) -> PartitionInstance:
    """2m integers uniform in [1, max_value], redrawn until the total is even."""
    if m < 1:
        raise ValidationError("m must be >= 1", field="m")
    if max_value < 1:
        raise ValidationError("max_value must be >= 1", field="max_value")
    rng = random.Random(seed)
    while True:
        values = [rng.randint(1, max_value) for _ in range(2 * m)]
        if sum(values) % 2 == 0:
            return PartitionInstance(values=tuple(values))
