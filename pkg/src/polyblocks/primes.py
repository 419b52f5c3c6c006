"""Prime sieving, primality testing and integer factorization."""

import math
import random

import numpy as np

# Deterministic for n < 2**64 (Jim Sinclair's witness set).
_MR_BASES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
# Deterministic for n < 3.3 * 10**24.
_MR_BASES_WIDE = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def sieve(limit):
    """Return a numpy array of all primes <= limit."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_p[p]:
            is_p[p * p::2 * p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def segmented_primes(lo, hi, segment=1 << 18):
    """Yield numpy arrays of the primes in [lo, hi], one segment at a time."""
    lo = max(lo, 2)
    if hi < lo:
        return
    base = sieve(math.isqrt(hi))
    start = lo
    while start <= hi:
        stop = min(start + segment - 1, hi)
        mask = np.ones(stop - start + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > stop:
                break
            first = max(p * p, -(-start // p) * p)
            mask[first - start::p] = False
        yield np.flatnonzero(mask).astype(np.int64) + start
        start = stop + 1


def prime_pi(x):
    return int(sum(len(seg) for seg in segmented_primes(2, x)))


def _strong_probable_prime(n, a, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Miller-Rabin; deterministic below 3.3e24, overwhelmingly reliable above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    if n < 1 << 64:
        bases = _MR_BASES_64
    else:
        bases = _MR_BASES_WIDE
        if n >= 3317044064679887385961981:
            rng = random.Random(n)
            bases = bases + tuple(rng.randrange(2, n - 1) for _ in range(16))
    return all(a % n == 0 or _strong_probable_prime(n, a % n, d, s) for a in bases)


def pollard_rho(n, seed=1):
    """Return a nontrivial factor of the odd composite n (Brent's variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


_trial_cache = {}


def _trial_primes(limit):
    if limit not in _trial_cache:
        _trial_cache[limit] = sieve(limit).tolist()
    return _trial_cache[limit]


def factorint(n, trial_limit=1000):
    """Prime factorization of |n| as a dict {prime: exponent}; n must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    for p in _trial_primes(trial_limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = pollard_rho(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def prime_factors(n):
    return list(factorint(n))


def divisors(n):
    """Positive divisors of |n| in increasing order."""
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)
