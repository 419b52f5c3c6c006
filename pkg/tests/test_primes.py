import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyblocks.primes import (divisors, factorint, is_prime, pollard_rho, prime_pi,
                               segmented_primes, sieve)


def _trial_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def test_sieve_small():
    assert sieve(20).tolist() == [2, 3, 5, 7, 11, 13, 17, 19]
    assert sieve(1).tolist() == []


def test_segmented_matches_sieve():
    whole = sieve(200_000)
    parts = np.concatenate(list(segmented_primes(2, 200_000, segment=9_999)))
    assert np.array_equal(whole, parts)
    assert list(np.concatenate(list(segmented_primes(90, 130)))) == [97, 101, 103, 107, 109, 113, 127]


def test_prime_pi():
    assert prime_pi(10**6) == 78498


def test_is_prime_against_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if _trial_is_prime(n)]


@pytest.mark.parametrize("n, expected", [
    (3215031751, False),              # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),     # strong pseudoprime to the first 9 prime bases
    (2**61 - 1, True),
    (2**89 - 1, True),
    ((2**61 - 1) * (2**31 - 1), False),
])
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


def test_pollard_rho_splits():
    n = 1000003 * 998244353
    d = pollard_rho(n)
    assert d in (1000003, 998244353)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10**15))
def test_factorint_reconstructs(n):
    fac = factorint(n)
    assert math.prod(p**e for p, e in fac.items()) == n
    assert all(is_prime(p) for p in fac)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-7) == [1, 7]
