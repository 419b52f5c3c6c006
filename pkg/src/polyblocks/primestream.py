"""Prime harvesting: the prime divisors of a polynomial, large primes with
close root pairs, and valuations of products of consecutive values."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate

from .errors import LemmaViolation, PreconditionFailed, RootInRange
from .intpoly import companion, horner, integer_roots, prime_density
from .modpoly import (EXHAUSTIVE_LIMIT, close_root_pair, fp_gcd, fp_sub,
                      has_root_mod_p, padic_root_count, roots_mod_prime_power)
from .primes import factorint, is_prime, segmented_primes, sieve

log = logging.getLogger(__name__)

_BATCH_LIMIT = 1 << 31  # products of two residues stay below 2**62
_COFACTOR_BITS = 128


def li(x):
    """Offset logarithmic integral, the integral of 1/log t over [2, x]."""
    if x <= 2:
        return 0.0
    val, _ = integrate.quad(lambda t: 1.0 / math.log(t), 2.0, float(x),
                            epsrel=1e-10, limit=500)
    return val


# --- vectorized X**p mod (f, p) over many primes -------------------------

def _vpowmod(a, e, p):
    result = np.ones_like(a)
    a = a % p
    e = e.copy()
    while np.any(e):
        odd = (e & 1).astype(bool)
        result = np.where(odd, result * a % p, result)
        a = a * a % p
        e >>= 1
    return result


def _vmulmod(a, b, f, p):
    """a*b mod monic f, rows are independent (one prime per row)."""
    d = f.shape[1] - 1
    pc = p[:, None]
    prod = np.zeros((a.shape[0], 2 * d - 1), dtype=np.int64)
    for i in range(d):
        prod[:, i:i + d] = (prod[:, i:i + d] + a[:, i:i + 1] * b % pc) % pc
    for t in range(2 * d - 2, d - 1, -1):
        c = prod[:, t:t + 1]
        prod[:, t - d:t] = (prod[:, t - d:t] - c * f[:, :d] % pc) % pc
    return prod[:, :d]


def _vtimes_x(a, f, p):
    d = f.shape[1] - 1
    pc = p[:, None]
    top = a[:, d - 1:d]
    out = np.zeros_like(a)
    out[:, 1:] = a[:, :d - 1]
    return (out - top * f[:, :d] % pc) % pc


def _batch_has_root(coeffs, primes):
    """Boolean array: does f have a root modulo each prime?  Requires every
    prime to be below 2**31 and coprime to the leading coefficient."""
    d = len(coeffs) - 1
    p = primes.astype(np.int64)
    raw = np.array([[c % int(q) for c in coeffs] for q in p], dtype=np.int64)
    inv = _vpowmod(raw[:, -1], p - 2, p)
    f = raw * inv[:, None] % p[:, None]
    if d == 1:
        return np.ones(len(p), dtype=bool)
    acc = np.zeros((len(p), d), dtype=np.int64)
    acc[:, 0] = 1
    for bit in range(int(p.max()).bit_length() - 1, -1, -1):
        acc = _vmulmod(acc, acc, f, p)
        set_ = ((p >> bit) & 1).astype(bool)
        if set_.any():
            acc = np.where(set_[:, None], _vtimes_x(acc, f, p), acc)
    out = np.empty(len(p), dtype=bool)
    for idx, q in enumerate(p.tolist()):
        g = fp_sub([int(c) for c in acc[idx]], [0, 1], q)
        fq = [int(c) for c in f[idx]]
        out[idx] = len(fp_gcd(g, fq, q)) > 1
    return out


def pf_primes(f, x):
    """Sorted array of the primes p <= x dividing some value f(n)."""
    chunks = []
    lead = f.lead
    for seg in segmented_primes(2, x):
        small = seg[seg < EXHAUSTIVE_LIMIT]
        big = seg[seg >= EXHAUSTIVE_LIMIT]
        keep = [q for q in small.tolist() if has_root_mod_p(f, q)]
        if len(big):
            fast = big[(big < _BATCH_LIMIT) & (np.array([lead % int(q) for q in big]) != 0)]
            slow = np.setdiff1d(big, fast)
            keep += [q for q in slow.tolist() if has_root_mod_p(f, q)]
            if len(fast):
                keep += fast[_batch_has_root(f.coeffs, fast)].tolist()
        chunks.append(np.array(sorted(keep), dtype=np.int64))
    return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)


@dataclass(frozen=True)
class PrimeSetReport:
    x: int
    count: int
    pi_x: int
    expected: float
    delta: Fraction
    relative_error: float

    @property
    def ratio(self):
        return self.count / self.pi_x

    def to_dict(self):
        return {"x": str(self.x), "count": str(self.count), "pi_x": str(self.pi_x),
                "expected": self.expected, "delta": str(self.delta),
                "relative_error": self.relative_error}

    csv_columns = ("x", "count", "pi_x", "expected", "delta", "relative_error")


def enumerate_pf(f, x, delta=None):
    """Count primes dividing a value of f up to x against delta_f * Li(x)."""
    if x < 2:
        raise PreconditionFailed("x must be >= 2")
    if delta is None:
        delta = prime_density(f)
    count = len(pf_primes(f, x))
    pi_x = int(sum(len(s) for s in segmented_primes(2, x)))
    if delta is None:
        return PrimeSetReport(x, count, pi_x, math.nan, None, math.nan)
    expected = float(delta) * li(x)
    return PrimeSetReport(x, count, pi_x, expected, Fraction(delta),
                          (count - expected) / expected)


def pf_contains_bruteforce(f, p):
    """Independent membership check: p | f(n) for some 0 <= n < p."""
    return any(horner(f.coeffs, n) % p == 0 for n in range(p))


# --- the large-prime harvest ------------------------------------------------

@dataclass(frozen=True)
class SNHarvest:
    N: int
    pairs: tuple  # CloseRootPair, sorted by prime
    count_ratio: Fraction

    @property
    def primes(self):
        return [pair.p for pair in self.pairs]

    def to_dict(self):
        return {"N": str(self.N), "count_ratio": str(self.count_ratio),
                "pairs": [{"p": str(c.p), "r": str(c.r), "z_minus": str(c.z_minus),
                           "z_plus": str(c.z_plus)} for c in self.pairs]}

    csv_columns = ("p", "r", "z_minus", "z_plus")

    def csv_rows(self):
        return [(c.p, c.r, c.z_minus, c.z_plus) for c in self.pairs]


def harvest_sn(f, N):
    """Primes p > N/2 dividing ftilde(r) for some r <= N/2, each with the
    close-root pair of smallest gap r.  Primes dividing 2 * a_k are skipped."""
    if f.degree not in (2, 3):
        raise PreconditionFailed("harvest needs degree 2 or 3")
    if N < 4:
        raise PreconditionFailed("N must be >= 4")
    ftilde = companion(f).poly
    half = N // 2
    small = sieve(half).tolist()
    best = {}
    for r in range(1, half + 1):
        v = abs(horner(ftilde.coeffs, r))
        if v == 0:
            continue
        for q in small:
            if v % q == 0:
                v //= q
                while v % q == 0:
                    v //= q
        if v == 1:
            continue
        if v.bit_length() > _COFACTOR_BITS and not is_prime(v):
            log.warning("skipping r=%d: composite cofactor of %d bits", r, v.bit_length())
            continue
        for q in factorint(v, trial_limit=2):
            if q > half and q not in best and (2 * f.lead) % q:
                best[q] = r
    pairs = []
    for q in sorted(best):
        try:
            pairs.append(close_root_pair(f, q, best[q], ftilde))
        except LemmaViolation:
            # cubic irreducible mod 3: the root differences live in F_3 but no root does
            log.warning("no close root pair for q=%d, r=%d", q, best[q])
    pairs = tuple(pairs)
    return SNHarvest(N, pairs, Fraction(len(pairs), N))


def sn_ratio_scan(f, Ns):
    """(N, #S_N / N) for each N; the ratios should stay away from zero."""
    return [(N, harvest_sn(f, N).count_ratio) for N in Ns]


# --- valuations ---------------------------------------------------------------

@dataclass(frozen=True)
class ValuationReport:
    p: int
    N: int
    nu: int
    tf: int
    main_term: Fraction
    error_bound: float

    @property
    def within_bound(self):
        return abs(self.nu - self.main_term) <= self.error_bound

    def to_dict(self):
        return {"p": str(self.p), "N": str(self.N), "nu": str(self.nu), "tf": str(self.tf),
                "main_term": str(self.main_term), "error_bound": self.error_bound}

    csv_columns = ("p", "N", "nu", "tf", "main_term", "error_bound")


def _count_residue(N, z, q):
    """#{1 <= n <= N : n = z mod q}."""
    return (N - z) // q - (-z) // q


def valuation_qn(f, p, N):
    """Exact p-adic valuation of f(1) f(2) ... f(N) via Hensel-lifted roots."""
    if any(1 <= z <= N for z in integer_roots(f)):
        raise RootInRange("f vanishes on [1, N]")
    tf = padic_root_count(f, p)
    bound = sum(abs(c) * N**i for i, c in enumerate(f.coeffs))
    nu = 0
    m, q = 1, p
    while q <= bound and tf:
        level = sum(_count_residue(N, z, q) for z in roots_mod_prime_power(f, p, m))
        if level == 0:
            break
        nu += level
        m += 1
        q *= p
    k = f.degree
    return ValuationReport(p, N, nu, tf, Fraction(tf * N, p - 1),
                           4 * k * (math.log(N) / math.log(p) + 1))


def valuation_bruteforce(f, p, N):
    """nu_p of the literal product of f(1), ..., f(N)."""
    prod = 1
    for n in range(1, N + 1):
        prod *= horner(f.coeffs, n)
    if prod == 0:
        raise RootInRange("f vanishes on [1, N]")
    nu = 0
    while prod % p == 0:
        prod //= p
        nu += 1
    return nu

