"""
Exit criteria.  One test per criterion; the terminal summary prints a
PASS/FAIL line for each.
"""

import itertools
import json
import random
import time

from fixcount import (
    INF,
    CycleCensus,
    ExplicitPermutation,
    FpcfWindow,
    Reason,
    Status,
    agree_with_inversion,
    brute_force_fixed_points,
    census_from_fpcf,
    census_of,
    fixture,
    fpcf_from_census,
    fpcf_window,
    lcm_all,
    minimal_period_window,
    mobius,
    divisors,
    period_bound,
    reconstruct,
    sum_of_divisors,
    validate_fpcf_window,
)
from fixcount.cli import main, window_to_json

from conftest import divisors_oracle, mobius_oracle


def random_finite_census(rng, max_len=50, max_count=10):
    support = rng.sample(range(1, max_len + 1), rng.randint(1, 10))
    return CycleCensus({ell: rng.randint(1, max_count) for ell in support})


def test_ac1_oracle_equivalence():
    start = time.perf_counter()
    total = 0
    for n in range(1, 7):
        for img in itertools.permutations(range(1, n + 1)):
            p = ExplicitPermutation(img)
            c = census_of(p)
            total += 1
            for k in range(1, 13):
                assert brute_force_fixed_points(p, k) == fpcf_from_census(c, k), (img, k)
    assert total == 873

    rng = random.Random(1)
    for _ in range(500):
        n = rng.randint(1, 12)
        img = list(range(1, n + 1))
        rng.shuffle(img)
        p = ExplicitPermutation(tuple(img))
        c = census_of(p)
        for k in range(1, 31):
            assert brute_force_fixed_points(p, k) == fpcf_from_census(c, k), (img, k)
    assert time.perf_counter() - start < 5.0


def test_ac2_round_trip_inversion():
    rng = random.Random(2)
    censuses = [random_finite_census(rng) for _ in range(1000)]
    start = time.perf_counter()
    for c in censuses:
        assert census_from_fpcf(fpcf_window(c, 64)) == c.restrict(64)
    assert time.perf_counter() - start < 2.0


def test_ac3_greedy_and_mobius_agree():
    rng = random.Random(3)
    valid, corrupted = [], []
    for _ in range(1000):
        vals = list(fpcf_window(random_finite_census(rng), 64).values)
        valid.append(FpcfWindow(tuple(vals)))
        k = rng.randint(1, 64)
        delta = rng.choice([d for d in range(-vals[k - 1], 8) if d != 0])
        vals[k - 1] += delta
        corrupted.append(FpcfWindow(tuple(vals)))

    start = time.perf_counter()
    assert all(agree_with_inversion(w) for w in valid)
    assert all(agree_with_inversion(w) for w in corrupted)
    assert time.perf_counter() - start < 2.0

    assert all(reconstruct(w).status == Status.COMPLETE for w in valid)
    rejected = sum(reconstruct(w).status == Status.INVALID for w in corrupted)
    assert rejected > 900  # most single-entry changes break the function


def test_ac4_sum_of_divisors_identity():
    for ell in range(1, 201):
        assert sum(mobius(ell // k) * sum_of_divisors(k) for k in divisors(ell)) == ell
        # same identity with the test-side oracles only
        assert sum(mobius_oracle(ell // k) * sum(divisors_oracle(k)) for k in divisors_oracle(ell)) == ell
    window = FpcfWindow(tuple(sum_of_divisors(k) for k in range(1, 25)))
    assert census_from_fpcf(window) == CycleCensus({ell: 1 for ell in range(1, 25)})


def test_ac5_fixture_family(tmp_path, capsys):
    K = 48
    fx = {name: fixture(name, K) for name in ("sigma1", "sigma2", "sigma3", "sigma4")}
    for a, b in itertools.combinations(fx, 2):
        assert fx[a].census != fx[b].census, (a, b)
    expected = FpcfWindow(tuple(0 if k % 2 else INF for k in range(1, K + 1)))
    for name, (census, window) in fx.items():
        assert window == expected
        assert fpcf_window(census, K) == expected, name

    path = tmp_path / "family.json"
    path.write_text(json.dumps(window_to_json(expected)))
    assert main(["invert", str(path)]) == 4
    capsys.readouterr()


def test_ac6_periodicity():
    rng = random.Random(6)
    for _ in range(200):
        support = rng.sample(range(1, 13), rng.randint(1, 4))
        census = CycleCensus({ell: rng.choice([INF, rng.randint(1, 5)]) for ell in support},
                             infinite=rng.choice([0, 1, INF]))
        m = lcm_all(support)
        assert period_bound(census) == m
        vals = fpcf_window(census, 2 * m).values
        assert all(vals[k] == vals[k + m] for k in range(m))
        assert m % minimal_period_window(FpcfWindow(vals)) == 0

    census, window = fixture("sigma0", 64)
    assert fpcf_window(census, 64) == window
    assert minimal_period_window(window) is None
    # m_r = lcm(1..r) along the lengths 1, 2, 3, 4: F(m_r) >= 1 + ... + r
    for r, m_r, bound in [(1, 1, 1), (2, 2, 3), (3, 6, 6), (4, 12, 10)]:
        assert lcm_all(range(1, r + 1)) == m_r
        assert window.at(m_r) >= bound
    assert [window.at(m) for m in (1, 2, 6, 12)] == sorted(window.at(m) for m in (1, 2, 6, 12))


def _oracle_failures(values):
    out = []
    for ell in range(1, len(values) + 1):
        s = sum(mobius_oracle(ell // k) * values[k - 1] for k in divisors_oracle(ell))
        if s < 0 or s % ell:
            out.append(ell)
    return out


def test_ac7_validator_characterization():
    rng = random.Random(7)
    for _ in range(1000):
        assert validate_fpcf_window(fpcf_window(random_finite_census(rng), 64)).valid

    rejected = 0
    for _ in range(1000):
        values = [rng.randint(0, 20) for _ in range(rng.randint(1, 30))]
        failing = _oracle_failures(values)
        report = validate_fpcf_window(FpcfWindow(tuple(values)))
        assert report.failing_lengths == failing
        assert report.valid == (not failing)
        if failing:
            rejected += 1
            assert report.first_failure[0] == failing[0]
    assert rejected > 0

    report = validate_fpcf_window(FpcfWindow((2, 3)))
    assert not report.valid
    assert report.first_failure == (2, Reason.NON_DIVISIBLE)


def test_ac8_worked_trace():
    seen = []
    result = reconstruct(FpcfWindow((1, 3, 4, 3, 1, 6)),
                         on_step=lambda step, residual: seen.append((step, residual)))
    assert [(s.ell, s.q) for s in result.steps] == [(1, 1), (2, 1), (3, 1)]
    assert result.status == Status.COMPLETE and result.total == 6
    assert len(seen) == 3
    for step, residual in seen:
        assert all(v == 0 for v in residual[:step.ell]), (step, residual)
