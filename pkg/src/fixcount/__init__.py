"""Fixed point counting functions of permutations and the cycle censuses they determine."""

from .census import (
    INF,
    CensusClassification,
    CycleCensus,
    ExtendedCount,
    FpcfWindow,
    InfiniteValueError,
    NotACountingFunctionError,
    Reason,
    ValidationReport,
    census_from_fpcf,
    census_union,
    classify,
    fpcf_from_census,
    fpcf_window,
    is_fpcf_infinite_at,
    is_infinite,
    minimal_period_window,
    period_bound,
    validate_fpcf_window,
)
from .numtheory import divisors, lcm_all, mobius, mobius_sieve, sum_of_divisors
from .permutation import (
    CycleDecomposition,
    CycleNotationError,
    ExplicitPermutation,
    brute_force_fixed_points,
    brute_force_window,
    census_of,
    decompose,
    fixture,
    order_of,
    parse_cycles,
    render_cycles,
)
from .reconstruct import (
    ReconstructionResult,
    ReconstructionStep,
    Status,
    agree_with_inversion,
    reconstruct,
)

__version__ = "0.1.0"
