"""Arithmetic of integer polynomials modulo a prime: roots, factor-degree
patterns, close-root pairs and Hensel lifting."""

import functools
import random
from dataclasses import dataclass

import numpy as np

from .errors import LemmaViolation, PreconditionFailed, RamifiedPrime, SquarefulReduction
from .intpoly import companion, discriminant, horner

EXHAUSTIVE_LIMIT = 10_000


# --- dense polynomials over F_p, coefficient lists low degree first --------

def fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_reduce(coeffs, p):
    return fp_trim([c % p for c in coeffs])


def fp_monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_sub(a, b, p):
    n = max(len(a), len(b))
    return fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                    for i in range(n)])


def fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([c % p for c in out])


def fp_divmod(a, b, p):
    """Quotient and remainder of a by b (b nonzero)."""
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        fp_trim(a)
    return fp_trim(q), a


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p) if a else a


def fp_powmod(base, e, mod, p):
    result = [1]
    base = fp_mod(base, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = fp_mod(fp_mul(base, base, p), mod, p)
    return result


def fp_eval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


# --- roots ---------------------------------------------------------------

@dataclass(frozen=True)
class RootsModP:
    p: int
    roots: tuple
    degenerate: bool = False  # p divides the leading coefficient


def _scan_roots(coeffs, p):
    z = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * z + (c % p)) % p
    return tuple(int(r) for r in np.flatnonzero(acc == 0))


def _split_linear(g, p, rng):
    """Roots of g, a monic product of distinct linear factors over F_p."""
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % p]
    if p == 2:
        return [z for z in (0, 1) if fp_eval(g, z, p) == 0]
    while True:
        a = rng.randrange(p)
        h = fp_powmod([a, 1], (p - 1) // 2, g, p)
        d = fp_gcd(fp_sub(h, [1], p), g, p)
        if 1 < len(d) < len(g):
            return _split_linear(d, p, rng) + _split_linear(fp_divmod(g, d, p)[0], p, rng)


def _gcd_roots(fp, p):
    g = fp_monic(fp, p)
    xp = fp_powmod([0, 1], p, g, p)
    lin = fp_gcd(fp_sub(xp, [0, 1], p), g, p)
    return sorted(_split_linear(lin, p, random.Random(p)))


@functools.lru_cache(maxsize=1 << 14)
def roots_mod_p(f, p):
    """All z in [0, p) with f(z) = 0 mod p."""
    fp = fp_reduce(f.coeffs, p)
    degenerate = f.lead % p == 0
    if not fp:
        if p >= EXHAUSTIVE_LIMIT:
            raise PreconditionFailed(f"f vanishes identically modulo {p}")
        return RootsModP(p, tuple(range(p)), degenerate)
    if len(fp) == 1:
        return RootsModP(p, (), degenerate)
    if p < EXHAUSTIVE_LIMIT:
        return RootsModP(p, _scan_roots(fp, p), degenerate)
    return RootsModP(p, tuple(_gcd_roots(fp, p)), degenerate)


def has_root_mod_p(f, p):
    fp = fp_reduce(f.coeffs, p)
    if len(fp) <= 1:
        return not fp
    if p < EXHAUSTIVE_LIMIT:
        return bool(_scan_roots(fp, p))
    g = fp_monic(fp, p)
    xp = fp_powmod([0, 1], p, g, p)
    return len(fp_gcd(fp_sub(xp, [0, 1], p), g, p)) > 1


def factor_degree_pattern(f, p):
    """Sorted degrees of the irreducible factors of f mod p (distinct-degree
    factorization); requires f mod p squarefree of full degree."""
    disc = discriminant(f) if f.degree >= 2 else 1
    if p == 2 or f.lead % p == 0 or disc % p == 0:
        raise SquarefulReduction(f"p = {p} divides 2 * a_k * disc")
    rest = fp_monic(fp_reduce(f.coeffs, p), p)
    degrees = []
    h = [0, 1]
    d = 1
    while len(rest) - 1 >= 2 * d:
        h = fp_powmod(h, p, rest, p)
        g = fp_gcd(fp_sub(h, [0, 1], p), rest, p)
        if len(g) > 1:
            degrees += [d] * ((len(g) - 1) // d)
            rest = fp_divmod(rest, g, p)[0]
            h = fp_mod(h, rest, p)
        d += 1
    if len(rest) > 1:
        degrees.append(len(rest) - 1)
    return sorted(degrees)


def factor_parity(f, p):
    """Number of irreducible factors of f mod p, modulo 2."""
    return len(factor_degree_pattern(f, p)) % 2


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# --- close roots ---------------------------------------------------------

@dataclass(frozen=True)
class CloseRootPair:
    p: int
    r: int
    z_minus: int
    z_plus: int

    def check(self, f):
        return (0 < self.z_plus - self.z_minus == self.r < self.p
                and horner(f.coeffs, self.z_minus) % self.p == 0
                and horner(f.coeffs, self.z_plus) % self.p == 0)


def close_root_pair(f, p, r, ftilde=None):
    """Roots z, z + r of f modulo p, for p | ftilde(r) with p not dividing 2 a_k.

    Such a pair exists for every quadratic and for cubics with p > 3.  A
    cubic irreducible mod 3 has roots a, a + 1, a + 2 in F_27, so 3 divides
    ftilde(1) with no pair in F_3; that case raises LemmaViolation.
    ``ftilde`` may be passed to skip recomputing the companion polynomial.
    """
    if f.degree not in (2, 3):
        raise PreconditionFailed("close-root pairs are only guaranteed for degree 2 or 3")
    if p == 2 or f.lead % p == 0:
        raise PreconditionFailed(f"p = {p} divides 2 * a_k")
    if not 0 < r < p:
        raise PreconditionFailed("need 0 < r < p")
    if ftilde is None:
        ftilde = companion(f).poly
    if horner(ftilde.coeffs, r) % p:
        raise PreconditionFailed(f"p = {p} does not divide ftilde({r})")
    roots = roots_mod_p(f, p).roots
    present = set(roots)
    for z in roots:
        if (z + r) % p in present:
            return CloseRootPair(p, r, z, z + r)
    raise LemmaViolation(f"no roots z, z + {r} of f modulo {p}")


# --- p-adic ----------------------------------------------------------------

def _ramified(f, p):
    disc = discriminant(f) if f.degree >= 2 else 1
    return f.lead % p == 0 or disc % p == 0


def padic_root_count(f, p):
    """Number of roots of f in Z_p at a prime where every root mod p is simple."""
    if _ramified(f, p):
        raise RamifiedPrime(f"p = {p} divides a_k * disc")
    return len(roots_mod_p(f, p).roots)


def hensel_lift(f, z, p, m):
    """Lift a simple root z mod p to the unique root mod p**m."""
    df = f.derivative()
    q = p
    for _ in range(m - 1):
        q *= p
        z = (z - horner(f.coeffs, z) * pow(horner(df, z), -1, q)) % q
    return z


def roots_mod_prime_power(f, p, m):
    if _ramified(f, p):
        raise RamifiedPrime(f"p = {p} divides a_k * disc")
    return sorted(hensel_lift(f, z, p, m) for z in roots_mod_p(f, p).roots)
