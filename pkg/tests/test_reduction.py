import random
from fractions import Fraction as F

import pytest

from bsched import (
    PartitionInstance,
    ValidationError,
    build_reduction,
    build_witness_schedule,
    check_feasible,
    check_prefix_dominance,
    decide_partition,
    evaluate_greedy,
    extract_partition,
    solve_exact,
)
from helpers import find_split, split_exists


def test_partition_instance_validation():
    with pytest.raises(ValidationError):
        PartitionInstance(())
    with pytest.raises(ValidationError):
        PartitionInstance((1, 2, 3))  # odd count
    with pytest.raises(ValidationError):
        PartitionInstance((1, 0))
    with pytest.raises(ValidationError):
        PartitionInstance((1, "2"))
    # odd totals are allowed at this level; the decision is just no
    assert decide_partition(PartitionInstance((1, 2))) is False


def test_build_reduction_images():
    image = build_reduction(PartitionInstance((1, 2, 3, 4)))
    assert image.u == 5
    assert image.threshold == 20
    assert image.instance.b == 2
    assert image.instance.window == 5
    assert image.instance.jobs == (F(1), F(2), F(3), F(4), F(0), F(0), F(5))

    image = build_reduction(PartitionInstance((2, 2)))
    assert image.instance.jobs == (F(2), F(2), F(0), F(0), F(2))
    assert image.threshold == 6

    image = build_reduction(PartitionInstance((1, 1, 1, 3)))
    assert image.instance.jobs == (F(1), F(1), F(1), F(3), F(0), F(0), F(3))
    assert image.threshold == 12


def test_build_reduction_rejects_odd_totals():
    with pytest.raises(ValidationError):
        build_reduction(PartitionInstance((1, 2)))


def test_witness_schedule_hits_the_threshold_exactly():
    part = PartitionInstance((1, 2, 3, 4))
    trace = build_witness_schedule(part, (3, 0), (1, 2))
    assert trace.completions == (F(0), F(4), F(7), F(10), F(15), F(20), F(20))
    assert trace.makespan == F(20)
    assert check_feasible(build_reduction(part).instance, trace)


def test_witness_schedule_m_equals_one():
    assert build_witness_schedule(PartitionInstance((2, 2)), (0,), (1,)).makespan == F(6)
    for c in (1, 5, 12):
        part = PartitionInstance((c, c))
        assert build_witness_schedule(part, (0,), (1,)).makespan == 3 * c


def test_witness_schedule_rejects_invalid_sides():
    part = PartitionInstance((1, 2, 3, 4))
    with pytest.raises(ValidationError):
        build_witness_schedule(part, (0,), (1, 2, 3))  # wrong cardinality
    with pytest.raises(ValidationError):
        build_witness_schedule(part, (0, 1), (2, 3))  # sums 3 vs 7
    with pytest.raises(ValidationError):
        build_witness_schedule(part, (0, 0), (1, 2))  # not a partition


def test_witness_interleaving_satisfies_prefix_dominance():
    part = PartitionInstance((8, 2, 5, 3, 7, 5))
    split = find_split(part.values)
    assert split is not None
    side1, side2 = split
    trace = build_witness_schedule(part, side1, side2)
    interleaved = trace.order[1:-2]  # between the leading zero and the long job
    odd_values = [part.values[j] for j in interleaved[0::2]]
    even_values = [part.values[j] for j in interleaved[1::2]]
    assert check_prefix_dominance(even_values, odd_values)


def test_decide_matches_direct_search_on_small_inputs():
    assert decide_partition(PartitionInstance((1, 2, 3, 4))) is True
    assert decide_partition(PartitionInstance((1, 1, 1, 3))) is False
    assert decide_partition(PartitionInstance((9, 9))) is True
    rng = random.Random(17)
    for _ in range(12):
        m = rng.randint(1, 2)
        values = tuple(rng.randint(1, 6) for _ in range(2 * m))
        part = PartitionInstance(values)
        assert decide_partition(part) == split_exists(values)


def test_image_optimum_never_beats_the_threshold():
    for values in ((1, 1, 1, 3), (2, 4), (5, 1, 1, 1)):
        image = build_reduction(PartitionInstance(values))
        assert solve_exact(image.instance).optimum > image.threshold


def test_extract_from_witness_and_from_exact_optimum():
    part = PartitionInstance((1, 2, 3, 4))
    witness = build_witness_schedule(part, (3, 0), (1, 2))
    assert extract_partition(part, witness) == ((0, 3), (1, 2))

    result = solve_exact(build_reduction(part).instance)
    side1, side2 = extract_partition(part, result.witness)
    assert sorted(side1 + side2) == [0, 1, 2, 3]
    assert sum(part.values[i] for i in side1) == 5
    assert sum(part.values[i] for i in side2) == 5


def test_extract_handles_the_long_job_on_the_even_side():
    # With two equal values the image's long job can legally sit in an even
    # slot; the extraction swaps roles with an equal-valued odd slot.
    part = PartitionInstance((2, 2))
    image = build_reduction(part)
    trace = evaluate_greedy(image.instance, (2, 0, 4, 1, 3))
    assert trace.makespan == image.threshold
    assert extract_partition(part, trace) == ((0,), (1,))


def test_extract_accepts_the_reversed_orientation():
    # reversing an optimal order keeps the makespan, with the zero-jobs at
    # the ends in the opposite orientation
    part = PartitionInstance((3, 1, 2, 2))
    image = build_reduction(part)
    witness = solve_exact(image.instance).witness
    reversed_trace = evaluate_greedy(image.instance, tuple(reversed(witness.order)))
    assert reversed_trace.makespan == image.threshold
    side1, side2 = extract_partition(part, reversed_trace)
    assert sum(part.values[i] for i in side1) == 4
    assert sum(part.values[i] for i in side2) == 4


def test_extract_rejects_non_threshold_traces():
    part = PartitionInstance((1, 1, 1, 3))
    image = build_reduction(part)
    best = solve_exact(image.instance)
    assert best.optimum > image.threshold
    with pytest.raises(ValidationError):
        extract_partition(part, best.witness)
