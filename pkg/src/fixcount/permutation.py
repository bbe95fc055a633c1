"""
Explicit permutations of {1, ..., n}.

These are the brute-force side of every cross-check: fixed points of
sigma^k are counted by actually composing the permutation with itself, never
through cycle lengths.  Also holds the cycle-notation reader and the named
example permutations (as censuses truncated to a window).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .census import INF, CycleCensus, FpcfWindow
from .numtheory import lcm_all, sum_of_divisors


class CycleNotationError(ValueError):
    """Bad cycle notation; ``position`` is the 0-based offset into the text."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class ExplicitPermutation:
    """``image[i - 1]`` is sigma(i)."""

    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        n = len(image)
        if n < 1:
            raise ValueError("a permutation needs n >= 1")
        seen = bytearray(n + 1)
        for x in image:
            if isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= n:
                raise ValueError(f"image value {x!r} outside 1..{n}")
            if seen[x]:
                raise ValueError(f"{x} appears twice in the image; not a bijection")
            seen[x] = 1
        object.__setattr__(self, "image", image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    @classmethod
    def identity(cls, n: int) -> "ExplicitPermutation":
        return cls(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles, each starting at its least element, ordered by that element."""

    cycles: tuple

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def __str__(self):
        return render_cycles(self)


def render_cycles(decomp: CycleDecomposition, skip_fixed: bool = False) -> str:
    return "".join(
        "(" + ",".join(map(str, c)) + ")"
        for c in decomp.cycles
        if not (skip_fixed and len(c) == 1)
    )


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def parse_cycles(text: str, n: int) -> ExplicitPermutation:
    """
    Read disjoint-cycle notation such as ``(1)(2,3)(4 5 6)`` on {1..n}.

    Elements may be separated by commas and/or whitespace.  Unmentioned
    elements are fixed, so the empty string is the identity.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    image = list(range(n + 1))
    used = set()
    i = _skip_ws(text, 0)
    while i < len(text):
        if text[i] != "(":
            raise CycleNotationError(f"expected '(' but found {text[i]!r}", i)
        i += 1
        cycle: list[int] = []
        while True:
            i = _skip_ws(text, i)
            if cycle:
                if i < len(text) and text[i] == ")":
                    i += 1
                    break
                if i < len(text) and text[i] == ",":
                    i = _skip_ws(text, i + 1)
                elif i < len(text) and not text[i - 1].isspace():
                    raise CycleNotationError("expected ',', whitespace or ')'", i)
            start = i
            if i >= len(text):
                raise CycleNotationError("unterminated cycle", i)
            if not text[i].isdigit() or text[i] == "0":
                raise CycleNotationError(f"expected a positive integer, found {text[i]!r}", i)
            while i < len(text) and text[i].isdigit():
                i += 1
            x = int(text[start:i])
            if x > n:
                raise CycleNotationError(f"element {x} outside 1..{n}", start)
            if x in used:
                raise CycleNotationError(f"duplicate element {x}", start)
            used.add(x)
            cycle.append(x)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a] = b
        i = _skip_ws(text, i)
    return ExplicitPermutation(tuple(image[1:]))


def max_element(text: str) -> int:
    """Largest integer mentioned in a cycle string (0 if none); used to default n."""
    best, cur = 0, ""
    for ch in text + " ":
        if ch.isdigit():
            cur += ch
        elif cur:
            best = max(best, int(cur))
            cur = ""
    return best


def decompose(perm: ExplicitPermutation) -> CycleDecomposition:
    n = perm.n
    seen = bytearray(n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cycle.append(x)
            x = perm.image[x - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def census_of(perm: ExplicitPermutation) -> CycleCensus:
    counts: dict[int, int] = {}
    for length in decompose(perm).lengths():
        counts[length] = counts.get(length, 0) + 1
    return CycleCensus(counts, 0)


def _compose(p: tuple, q: tuple) -> tuple:
    # (p o q)(i) = p(q(i)), 0-indexed array form
    return tuple(p[j] for j in q)


def power(perm: ExplicitPermutation, k: int) -> tuple:
    """sigma^k in 0-indexed array form, by repeated squaring."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = tuple(x - 1 for x in perm.image)
    result = tuple(range(perm.n))
    while k:
        if k & 1:
            result = _compose(base, result)
        base = _compose(base, base)
        k >>= 1
    return result


def brute_force_fixed_points(perm: ExplicitPermutation, k: int) -> int:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    pk = power(perm, k)
    return sum(1 for i, j in enumerate(pk) if i == j)


def brute_force_window(perm: ExplicitPermutation, K: int) -> list[int]:
    """[#Fix(sigma^1), ..., #Fix(sigma^K)] by stepping sigma^k -> sigma^(k+1)."""
    if K < 1:
        raise ValueError(f"K must be a positive integer, got {K}")
    img = np.asarray(perm.image, dtype=np.int64) - 1
    ident = np.arange(perm.n, dtype=np.int64)
    cur = ident
    out = []
    for _ in range(K):
        cur = img[cur]
        out.append(int(np.count_nonzero(cur == ident)))
    return out


def order_of(perm: ExplicitPermutation) -> int:
    return lcm_all(decompose(perm).lengths())


class Fixture(NamedTuple):
    census: CycleCensus
    window: FpcfWindow


FIXTURES = ("sigma0", "sigma1", "sigma2", "sigma3", "sigma4")

# Infinite permutations of N with known cycle counts.  sigma0 has one cycle of
# every length; sigma1..sigma4 only have 2- and 4-cycles, infinitely many of
# some, and sigma4 additionally one infinite cycle.
_BOUNDED_CENSUSES = {
    "sigma1": ({2: INF}, 0),
    "sigma2": ({2: INF, 4: 1}, 0),
    "sigma3": ({2: INF, 4: INF}, 0),
    "sigma4": ({2: INF}, 1),
}


def fixture(name: str, K: int) -> Fixture:
    """
    Census of a named example restricted to lengths <= K, with its expected
    window F(1..K).  The expected windows come from closed forms (sigma(k) for
    sigma0, "0 on odd k, INF on even k" for the others), not from the census.
    """
    if K < 1:
        raise ValueError(f"K must be a positive integer, got {K}")
    if name == "sigma0":
        census = CycleCensus({ell: 1 for ell in range(1, K + 1)})
        window = FpcfWindow(tuple(sum_of_divisors(k) for k in range(1, K + 1)))
        return Fixture(census, window)
    if name not in _BOUNDED_CENSUSES:
        raise ValueError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURES)}")
    cycles, infinite = _BOUNDED_CENSUSES[name]
    census = CycleCensus(cycles, infinite).restrict(K)
    window = FpcfWindow(tuple(INF if k % 2 == 0 else 0 for k in range(1, K + 1)))
    return Fixture(census, window)
