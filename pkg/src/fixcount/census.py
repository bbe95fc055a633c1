"""
Cycle censuses and fixed point counting functions.

A census records how many cycles of each finite length a permutation has
(``cycles``) plus how many infinite cycles it has (``infinite``).  Counts are
extended integers: a nonnegative ``int`` or the singleton ``INF``.

The fixed point counting function of a census is

    F(k) = sum over lengths l dividing k of  l * C(l)

and infinite cycles never contribute to it.  For finite counts the census is
recovered by Moebius inversion, C(l) = (1/l) * sum_{k | l} mu(l/k) F(k).
Because the arithmetic functions live on all positive integers, everything
here works on a finite window 1..K and conclusions drawn from a window are
only evidence about the whole function.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from .numtheory import _mobius_table, lcm_all


@functools.total_ordering
class _Infinity:
    """The value infinity for extended counts.  Absorbs addition, exceeds every int."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __hash__(self):
        return hash("fixcount.INF")

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __lt__(self, other):
        if isinstance(other, (int, _Infinity)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, other):
        # only positive multiples are meaningful (a length times a count)
        if isinstance(other, int) and other > 0:
            return self
        return NotImplemented

    __rmul__ = __mul__


INF = _Infinity()

ExtendedCount = Union[int, _Infinity]


def is_infinite(x: ExtendedCount) -> bool:
    return isinstance(x, _Infinity)


def _check_count(x, what: str) -> ExtendedCount:
    if is_infinite(x):
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{what} must be an int or INF, got {x!r}")
    if x < 0:
        raise ValueError(f"{what} must be nonnegative, got {x}")
    return x


class InfiniteValueError(ValueError):
    """A window entry is infinite where only finite values make sense."""

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            f"F({k}) is infinite: the census is not determined by the fixed point "
            "counting function (permutations with infinitely many cycles of one "
            "length can share it, e.g. (1,2)(3,4)... and (1,2,3,4)(5,6)(7,8)...)"
        )


class Reason(str, enum.Enum):
    """Why a window is not the fixed point counting function of a permutation."""

    NEGATIVE_VALUE = "NegativeValue"
    NON_DIVISIBLE = "NonDivisible"
    MONOTONICITY_VIOLATION = "MonotonicityViolation"


class NotACountingFunctionError(ValueError):
    def __init__(self, ell: int, reason: Reason, detail: str = ""):
        self.ell = ell
        self.reason = Reason(reason)
        msg = f"not a fixed point counting function: {self.reason.value} at {ell}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


@dataclass(frozen=True, init=False)
class CycleCensus:
    """
    Conjugacy-class datum of a permutation.

    Only lengths with a nonzero count are stored, so two censuses compare
    equal exactly when the permutations they describe are conjugate.
    """

    _items: tuple = field(repr=False)
    infinite: ExtendedCount = 0

    def __init__(self, cycles: Optional[Mapping[int, ExtendedCount]] = None,
                 infinite: ExtendedCount = 0):
        items = []
        for length, count in (cycles or {}).items():
            if isinstance(length, bool) or not isinstance(length, int) or length < 1:
                raise ValueError(f"cycle length must be a positive integer, got {length!r}")
            count = _check_count(count, f"count of length {length}")
            if count != 0:
                items.append((length, count))
        items.sort()
        object.__setattr__(self, "_items", tuple(items))
        object.__setattr__(self, "infinite", _check_count(infinite, "infinite cycle count"))

    @property
    def cycles(self) -> dict[int, ExtendedCount]:
        return dict(self._items)

    @property
    def support(self) -> list[int]:
        return [length for length, _ in self._items]

    def count(self, length: int) -> ExtendedCount:
        for ell, c in self._items:
            if ell == length:
                return c
        return 0

    def restrict(self, K: int) -> "CycleCensus":
        """The same census with every length above K dropped."""
        return CycleCensus({ell: c for ell, c in self._items if ell <= K}, self.infinite)

    def is_empty(self) -> bool:
        return not self._items

    def __repr__(self):
        body = ", ".join(f"{ell}: {c}" for ell, c in self._items)
        return f"CycleCensus({{{body}}}, infinite={self.infinite})"


@dataclass(frozen=True)
class FpcfWindow:
    """
    Values F(1), ..., F(K) of an arithmetic function.

    Entries are ints or INF.  Negative ints are accepted so that arbitrary
    integer-valued functions can be checked; they are never counting functions.
    """

    values: tuple

    def __post_init__(self):
        vals = []
        for k, v in enumerate(self.values, start=1):
            if is_infinite(v):
                vals.append(INF)
            elif isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"window value at k={k} must be an int or INF, got {v!r}")
            else:
                vals.append(v)
        if not vals:
            raise ValueError("a window needs at least one value (K >= 1)")
        object.__setattr__(self, "values", tuple(vals))

    @property
    def bound(self) -> int:
        return len(self.values)

    K = bound

    def at(self, k: int) -> ExtendedCount:
        """F(k), 1-indexed."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"k={k} outside window 1..{len(self.values)}")
        return self.values[k - 1]

    def first_infinite(self) -> Optional[int]:
        for k, v in enumerate(self.values, start=1):
            if is_infinite(v):
                return k
        return None

    def require_finite(self) -> None:
        k = self.first_infinite()
        if k is not None:
            raise InfiniteValueError(k)


@dataclass(frozen=True)
class CensusClassification:
    finite_type: bool
    infinite_type: bool
    bounded: bool
    finite_multiplicity: bool


def _check_k(k: int, name: str = "k") -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"{name} must be a positive integer, got {k!r}")


def fpcf_from_census(census: CycleCensus, k: int) -> ExtendedCount:
    """Number of fixed points of sigma^k for a permutation with this census."""
    _check_k(k)
    total: ExtendedCount = 0
    for ell, c in census._items:
        if ell > k:
            break
        if k % ell == 0:
            total = total + ell * c
    return total


def fpcf_window(census: CycleCensus, K: int) -> FpcfWindow:
    _check_k(K, "K")
    vals: list = [0] * (K + 1)
    for ell, c in census._items:
        if ell > K:
            break
        contrib = ell * c
        for m in range(ell, K + 1, ell):
            vals[m] = vals[m] + contrib
    return FpcfWindow(tuple(vals[1:]))


def mobius_sums(window: FpcfWindow) -> list[int]:
    """
    sum_{k | l} mu(l/k) F(k) for l = 1..K, as a list indexed l - 1.

    For a genuine counting function entry l equals l * C(l).
    """
    window.require_finite()
    K = window.bound
    mu = _mobius_table(K)
    acc = [0] * (K + 1)
    for k, f in enumerate(window.values, start=1):
        if f == 0:
            continue
        for ell in range(k, K + 1, k):
            m = mu[ell // k]
            if m:
                acc[ell] += m * f
    return acc[1:]


def census_from_fpcf(window: FpcfWindow) -> CycleCensus:
    """
    Recover the finite-cycle census from F(1..K) by Moebius inversion.

    Lengths above K cannot be seen in the window and are absent from the
    result.  The infinite-cycle count is always 0: F is blind to infinite
    cycles, so nothing can be said about them.

    Raises InfiniteValueError for INF entries and NotACountingFunctionError
    at the least length whose Moebius sum is negative or not divisible by it.
    """
    sums = mobius_sums(window)
    cycles = {}
    for ell, s in enumerate(sums, start=1):
        if s < 0:
            raise NotACountingFunctionError(ell, Reason.NEGATIVE_VALUE, f"Moebius sum {s} < 0")
        if s % ell:
            raise NotACountingFunctionError(
                ell, Reason.NON_DIVISIBLE, f"Moebius sum {s} not divisible by {ell}")
        if s:
            cycles[ell] = s // ell
    return CycleCensus(cycles, 0)


def classify(census: CycleCensus) -> CensusClassification:
    """
    Type predicates of the permutation behind a census.

    An entirely empty census (no cycles at all) is neither of finite nor of
    infinite type.  ``bounded`` is always true because the data model only
    holds finitely many lengths.
    """
    nonempty = not census.is_empty()
    return CensusClassification(
        finite_type=nonempty and census.infinite == 0,
        infinite_type=not nonempty and census.infinite >= 1,
        bounded=True,
        finite_multiplicity=not any(is_infinite(c) for _, c in census._items),
    )


def is_fpcf_infinite_at(census: CycleCensus, k: int) -> bool:
    _check_k(k)
    return any(is_infinite(c) and k % ell == 0 for ell, c in census._items)


@dataclass(frozen=True)
class LengthCheck:
    ell: int
    mobius_sum: int
    nonnegative: bool
    divisible: bool

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.divisible


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of checking F(1..K) against the characterization of counting
    functions: each Moebius sum must be nonnegative and divisible by its
    length.  ``monotone`` records the necessary condition F(d*l) >= F(l).
    """

    bound: int
    checks: tuple
    monotone: bool
    monotonicity_violations: tuple  # (l, d*l) pairs with F(d*l) < F(l)

    @property
    def valid(self) -> bool:
        return self.monotone and all(c.ok for c in self.checks)

    @property
    def failing_lengths(self) -> list[int]:
        return [c.ell for c in self.checks if not c.ok]

    @property
    def first_failure(self) -> Optional[tuple[int, Reason]]:
        for c in self.checks:
            if not c.nonnegative:
                return c.ell, Reason.NEGATIVE_VALUE
            if not c.divisible:
                return c.ell, Reason.NON_DIVISIBLE
        if self.monotonicity_violations:
            return self.monotonicity_violations[0][1], Reason.MONOTONICITY_VIOLATION
        return None


def validate_fpcf_window(window: FpcfWindow) -> ValidationReport:
    sums = mobius_sums(window)
    checks = tuple(
        LengthCheck(ell, s, s >= 0, s % ell == 0) for ell, s in enumerate(sums, start=1)
    )
    vals = window.values
    K = window.bound
    violations = []
    for ell in range(1, K + 1):
        base = vals[ell - 1]
        for m in range(2 * ell, K + 1, ell):
            if vals[m - 1] < base:
                violations.append((ell, m))
    return ValidationReport(K, checks, not violations, tuple(violations))


def period_bound(census: CycleCensus) -> int:
    """
    A period of the fixed point counting function: the lcm of the finite
    cycle lengths present, or 1 when there are none (F is identically 0).
    """
    if census.is_empty():
        return 1
    return lcm_all(census.support)


def minimal_period_window(window: FpcfWindow) -> Optional[int]:
    """
    Least p <= K/2 with F(k + p) == F(k) for all k + p <= K, or None.

    Requiring two full periods inside the window keeps the answer from being
    trivially true, but it remains evidence from 1..K only.
    """
    vals = window.values
    K = len(vals)
    if K < 2:
        raise ValueError("minimal_period_window needs K >= 2")
    for p in range(1, K // 2 + 1):
        if all(vals[i + p] == vals[i] for i in range(K - p)):
            return p
    return None


def census_union(a: CycleCensus, b: CycleCensus) -> CycleCensus:
    """Census of the permutation acting as a on one set and b on a disjoint one."""
    cycles = a.cycles
    for ell, c in b._items:
        cycles[ell] = cycles.get(ell, 0) + c
    return CycleCensus(cycles, a.infinite + b.infinite)

