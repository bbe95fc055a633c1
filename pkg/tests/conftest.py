import random

import pytest
from hypothesis import strategies as st

from fixcount import INF, CycleCensus


# --- independent oracles: none of these touch fixcount's number theory ------

def divisors_oracle(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors_oracle(n):
    out, p = [], 2
    while n > 1:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    return out


def mobius_oracle(n):
    f = prime_factors_oracle(n)
    if len(f) != len(set(f)):
        return 0
    return (-1) ** len(f)


def fixed_points_by_iteration(image, k):
    """Apply a 1-indexed permutation k times to every point, literally."""
    count = 0
    for x in range(1, len(image) + 1):
        y = x
        for _ in range(k):
            y = image[y - 1]
        count += y == x
    return count


def random_census(rng, max_len=50, max_count=10, max_support=8):
    size = rng.randint(1, max_support)
    return CycleCensus({rng.randint(1, max_len): rng.randint(1, max_count) for _ in range(size)})


@pytest.fixture
def rng():
    return random.Random(20261019)


finite_censuses = st.dictionaries(
    st.integers(1, 30), st.integers(1, 9), max_size=6
).map(CycleCensus)

extended_counts = st.one_of(st.integers(0, 9), st.just(INF))

extended_censuses = st.builds(
    CycleCensus,
    st.dictionaries(st.integers(1, 12), extended_counts, max_size=5),
    st.one_of(st.just(0), st.integers(0, 3), st.just(INF)),
)


# --- acceptance summary: one line per criterion ------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
