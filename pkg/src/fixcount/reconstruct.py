"""
Greedy reconstruction of a census from a fixed point counting function.

The shortest cycle length l is the least k with F(k) > 0, and there are
q = F(l) / l cycles of that length.  Removing them lowers F by q*l at every
multiple of l and leaves zeros on 1..l; repeating on the residual yields the
strictly increasing lengths l_1 < l_2 < ... with multiplicities q_j.  Any
negative residual or non-divisible F(l) proves the input is not a counting
function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

from .census import (
    CycleCensus,
    FpcfWindow,
    NotACountingFunctionError,
    Reason,
    census_from_fpcf,
)


class Status(str, enum.Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"
    INVALID = "invalid"


@dataclass(frozen=True)
class ReconstructionStep:
    ell: int
    q: int


@dataclass(frozen=True)
class ReconstructionResult:
    """
    Steps (l_j, q_j) and how the run ended.

    ``complete``: the residual vanished and the window was declared to be the
    whole function; ``total`` is the size of the permuted set.
    ``partial``: the residual vanished on 1..K but the window is a prefix of a
    longer function, so more cycles may exist beyond K.
    ``invalid``: ``reason`` and ``at`` locate the failed check.
    Divisibility-monotonicity is only checked up to ``bound``.
    """

    steps: tuple
    status: Status
    bound: int
    total: Optional[int] = None
    reason: Optional[Reason] = None
    at: Optional[int] = None

    @property
    def census(self) -> CycleCensus:
        return CycleCensus({s.ell: s.q for s in self.steps})

    @property
    def is_zero_function(self) -> bool:
        return self.status != Status.INVALID and not self.steps

    def as_dict(self) -> dict:
        out: dict = {
            "steps": [{"ell": s.ell, "q": s.q} for s in self.steps],
            "status": self.status.value,
        }
        if self.status == Status.COMPLETE:
            out["total"] = self.total
        elif self.status == Status.PARTIAL:
            out["K"] = self.bound
        else:
            out["reason"] = self.reason.value
            out["at"] = self.at
        return out


def reconstruct(
    window: FpcfWindow,
    truncated: bool = False,
    on_step: Optional[Callable[[ReconstructionStep, tuple], None]] = None,
) -> ReconstructionResult:
    """
    Run the greedy stripping on F(1..K).

    ``truncated`` says the window is a prefix of a longer function; a clean
    run then ends ``partial`` instead of ``complete``.  ``on_step`` is called
    after each subtraction with the step and a read-only view of the residual
    (index k - 1 holds the residual at k); tests use it to watch invariants.

    Raises InfiniteValueError when the window has INF entries: such functions
    do not determine a census.
    """
    window.require_finite()
    K = window.bound
    residual = list(window.values)
    steps: list[ReconstructionStep] = []

    def invalid(reason: Reason, at: int) -> ReconstructionResult:
        return ReconstructionResult(tuple(steps), Status.INVALID, K, reason=reason, at=at)

    # Negativity only needs a full scan once: later subtractions are guarded
    # by the monotonicity check, which refuses any step that would go below 0.
    for k, v in enumerate(residual, start=1):
        if v < 0:
            return invalid(Reason.NEGATIVE_VALUE, k)

    ell = 1
    while True:
        while ell <= K and residual[ell - 1] == 0:
            ell += 1
        if ell > K:
            break
        value = residual[ell - 1]
        if value % ell:
            return invalid(Reason.NON_DIVISIBLE, ell)
        for m in range(2 * ell, K + 1, ell):
            if residual[m - 1] < value:
                return invalid(Reason.MONOTONICITY_VIOLATION, m)
        for m in range(ell, K + 1, ell):
            residual[m - 1] -= value
        step = ReconstructionStep(ell, value // ell)
        steps.append(step)
        if on_step is not None:
            on_step(step, tuple(residual))

    if truncated:
        return ReconstructionResult(tuple(steps), Status.PARTIAL, K)
    total = sum(s.ell * s.q for s in steps)
    return ReconstructionResult(tuple(steps), Status.COMPLETE, K, total=total)


def agree_with_inversion(window: FpcfWindow) -> bool:
    """True when greedy stripping and Moebius inversion give the same census, or both reject."""
    result = reconstruct(window)
    try:
        inverted = census_from_fpcf(window)
    except NotACountingFunctionError:
        return result.status == Status.INVALID
    if result.status == Status.INVALID:
        return False
    return result.census == inverted
