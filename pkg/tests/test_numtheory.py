import pytest
from hypothesis import given, strategies as st

from fixcount.numtheory import (
    MAX_UINT,
    divisors,
    lcm_all,
    mobius,
    mobius_sieve,
    sum_of_divisors,
)

from conftest import divisors_oracle, mobius_oracle


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (7, [1, 7])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected


def test_divisors_match_trial_division():
    for n in range(1, 500):
        assert divisors(n) == divisors_oracle(n)


@given(st.integers(1, 10**6))
def test_divisors_pair_up(n):
    ds = divisors(n)
    assert ds[0] == 1 and ds[-1] == n
    assert sorted(n // d for d in ds) == ds


@pytest.mark.parametrize("fn", [divisors, mobius, sum_of_divisors, mobius_sieve])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


@pytest.mark.parametrize("n, mu", [(1, 1), (6, 1), (12, 0), (2, -1), (30, -1), (9, 0)])
def test_mobius_examples(n, mu):
    assert mobius(n) == mu


def test_mobius_matches_factorization_oracle():
    for n in range(1, 2000):
        assert mobius(n) == mobius_oracle(n), n


def test_sieve_examples():
    assert mobius_sieve(1) == [1]
    assert mobius_sieve(6) == [1, -1, -1, 0, -1, 1]
    assert mobius_sieve(10)[9 - 1] == 0


def test_sieve_agrees_with_pointwise():
    K = 3000
    table = mobius_sieve(K)
    assert len(table) == K
    assert all(table[n - 1] == mobius(n) for n in range(1, K + 1))


def test_mobius_sum_over_divisors():
    for n in range(1, 400):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@pytest.mark.parametrize("n, s", [(1, 1), (6, 12), (8, 15), (12, 28)])
def test_sum_of_divisors(n, s):
    assert sum_of_divisors(n) == s


def test_inverting_sigma_gives_identity():
    for ell in range(1, 200):
        assert sum(mobius(ell // k) * sum_of_divisors(k) for k in divisors(ell)) == ell


@pytest.mark.parametrize("values, m", [([2], 2), ([2, 3], 6), ([4, 6], 12), ([1, 1, 1], 1)])
def test_lcm(values, m):
    assert lcm_all(values) == m


def test_lcm_errors():
    with pytest.raises(ValueError):
        lcm_all([])
    with pytest.raises(ValueError):
        lcm_all([3, 0])
    with pytest.raises(OverflowError):
        lcm_all([MAX_UINT, MAX_UINT - 1])


def test_lcm_at_limit_is_fine():
    assert lcm_all([MAX_UINT]) == MAX_UINT
    # lcm(1..46) still fits in 64 bits, lcm(1..47) does not
    lcm_all(range(1, 47))
    with pytest.raises(OverflowError):
        lcm_all(range(1, 48))
