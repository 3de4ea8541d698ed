"""Single-processor scheduling under a sliding-window job cap.

No window of length W may intersect more than b jobs. The package provides
greedy placement of a permutation, two feasibility checkers, exact optimal
search, the LPT heuristic with its guarantee check, an encoding of
equal-cardinality equal-sum partition as a scheduling question (in both
directions), and a rounding + dynamic-programming approximation scheme.
All arithmetic is exact rational arithmetic.
"""

from .core import (
    Instance,
    ScheduleTrace,
    TimeValue,
    check_feasible,
    check_feasible_geometric,
    check_prefix_dominance,
    evaluate_greedy,
    lower_bound,
    trace_from_gaps,
    validate_permutation,
)
from .errors import InternalError, LimitExceededError, SchedulingError, ValidationError
from .exact import ExactResult, solve_exact, solve_exact_unpruned
from .generate import gen_partition, gen_random
from .heuristics import check_lpt_bound, lpt_permutation, lpt_schedule
from .ptas import (
    DpSolution,
    PtasConfig,
    RoundedInstance,
    dp_solve,
    idle_ladder,
    ptas_solve,
    round_instance,
)
from .reduction import (
    PartitionInstance,
    ReductionImage,
    build_reduction,
    build_witness_schedule,
    decide_partition,
    extract_partition,
)
from .serialize import (
    emit_instance,
    emit_partition,
    emit_trace,
    parse_instance,
    parse_partition,
    parse_rational,
    parse_trace,
)

__version__ = "0.1.0"

__all__ = [
    "Instance",
    "ScheduleTrace",
    "TimeValue",
    "check_feasible",
    "check_feasible_geometric",
    "check_prefix_dominance",
    "evaluate_greedy",
    "lower_bound",
    "trace_from_gaps",
    "validate_permutation",
    "SchedulingError",
    "ValidationError",
    "LimitExceededError",
    "InternalError",
    "ExactResult",
    "solve_exact",
    "solve_exact_unpruned",
    "check_lpt_bound",
    "lpt_permutation",
    "lpt_schedule",
    "PartitionInstance",
    "ReductionImage",
    "build_reduction",
    "build_witness_schedule",
    "decide_partition",
    "extract_partition",
    "PtasConfig",
    "RoundedInstance",
    "DpSolution",
    "round_instance",
    "idle_ladder",
    "dp_solve",
    "ptas_solve",
    "gen_random",
    "gen_partition",
    "parse_instance",
    "emit_instance",
    "parse_partition",
    "emit_partition",
    "parse_trace",
    "emit_trace",
    "parse_rational",
]
