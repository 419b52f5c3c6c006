"""Blocks of consecutive values in which no value is coprime to all the others:
verification, Chinese-remainder cover plans, and plan serialization."""

import json
import math
from dataclasses import dataclass, field

from .errors import (DuplicateModulus, InsufficientHarvest, IsolatedOffset, LemmaViolation,
                     NoBasePrimes, PreconditionFailed, ZeroValue)
from .intpoly import IntPoly, classify, horner, resultant_coeffs, taylor_shift
from .modpoly import has_root_mod_p, roots_mod_p
from .primes import factorint, sieve
from .primestream import harvest_sn


# --- CRT -------------------------------------------------------------------

def solve_crt(congruences):
    """Least nonnegative n with n = c (mod p) for every (c, p), and the modulus product."""
    n, M = 0, 1
    seen = set()
    for c, p in congruences:
        if p in seen:
            raise DuplicateModulus(f"modulus {p} repeated")
        seen.add(p)
        # n + M*t = c (mod p)
        t = (c - n) * pow(M, -1, p) % p
        n += M * t
        M *= p
    return n, M


# --- block verification ------------------------------------------------------

@dataclass(frozen=True)
class BlockWitness:
    """Offsets h in [1, k] mapped to (partner offset, prime dividing both values)."""

    f: IntPoly
    n: int
    k: int
    partners: dict = field(hash=False)

    def check(self):
        """Re-verify every divisibility claim by modular evaluation."""
        if set(self.partners) != set(range(1, self.k + 1)):
            return False
        for h, (h2, p) in self.partners.items():
            if h2 == h or not 1 <= h2 <= self.k or p < 2:
                return False
            if horner(self.f.coeffs, self.n + h) % p or horner(self.f.coeffs, self.n + h2) % p:
                return False
        return True

    @property
    def primes(self):
        return sorted({p for _, p in self.partners.values()})

    def shifted(self, m):
        return BlockWitness(self.f, self.n + m, self.k, dict(self.partners))

    def to_dict(self):
        return {"kind": "BlockWitness", "poly": str(self.f), "n": str(self.n), "k": self.k,
                "partners": {str(h): {"partner": h2, "prime": str(p)}
                             for h, (h2, p) in sorted(self.partners.items())}}

    @classmethod
    def from_dict(cls, d):
        partners = {int(h): (int(v["partner"]), int(v["prime"])) for h, v in d["partners"].items()}
        return cls(IntPoly.parse(d["poly"]), int(d["n"]), int(d["k"]), partners)


def _small_prime_factor(g, hint):
    """A prime dividing g; ``hint`` is a nonzero multiple of every common prime."""
    if hint:
        h = math.gcd(g, hint)
        if h > 1:
            g = h
    return next(iter(factorint(g)))


def verify_block(f, n, k):
    """Partner map for the block f(n+1), ..., f(n+k), or raise IsolatedOffset.

    Partners are searched in ascending offset order with early exit; the
    shared prime is the smallest prime factor of the gcd.
    """
    if k < 2:
        raise PreconditionFailed("block length must be >= 2")
    vals = [horner(f.coeffs, n + h) for h in range(1, k + 1)]
    for h, v in enumerate(vals, 1):
        if v == 0:
            raise ZeroValue(h)
    resultants = {}
    partners = {}
    for h in range(1, k + 1):
        v = vals[h - 1]
        for h2 in range(1, k + 1):
            if h2 == h:
                continue
            g = math.gcd(v, vals[h2 - 1])
            if g > 1:
                d = abs(h2 - h)
                if d not in resultants:
                    resultants[d] = resultant_coeffs(f.coeffs, taylor_shift(f.coeffs, d))
                p = _small_prime_factor(g, resultants[d])
                partners[h] = (h2, p)
                break
        else:
            raise IsolatedOffset(h)
    return BlockWitness(f, n, k, partners)


def is_block(f, n, k):
    try:
        verify_block(f, n, k)
    except (IsolatedOffset, ZeroValue):
        return False
    return True


# --- cover plans ---------------------------------------------------------------

@dataclass(frozen=True)
class Hole:
    h: int          # offset not divisible by any base prime
    q: int          # harvested prime assigned to it
    target: int     # n + h = target (mod q); one of the close roots
    partner: int    # offset whose value shares q


@dataclass(frozen=True)
class CoverPlan:
    f: IntPoly
    N: int
    base_primes: tuple  # (p, anchor root z_p)
    holes: tuple        # Hole
    modulus: int
    n0: int
    predicted_holes: float = math.nan  # sieve upper bound N prod(1 - 1/p) + 2**s

    @property
    def congruences(self):
        return ([(z % p, p) for p, z in self.base_primes]
                + [((hole.target - hole.h) % hole.q, hole.q) for hole in self.holes])

    def certificate(self, n=None):
        """Partner map predicted by the construction, checked only by
        modular evaluation (the gcds of the full values are never taken)."""
        n = self.n0 if n is None else n
        partners = {}
        holes = {hole.h: hole for hole in self.holes}
        for h in range(1, self.N + 1):
            if h in holes:
                hole = holes[h]
                partners[h] = (hole.partner, hole.q)
                continue
            p = next(p for p, _ in self.base_primes if h % p == 0)
            partners[h] = (h + p if h + p <= self.N else h - p, p)
        return BlockWitness(self.f, n, self.N, partners)

    def check(self):
        """Structural invariants plus the modular certificate at n0."""
        moduli = [p for _, p in self.congruences]
        if len(set(moduli)) != len(moduli) or math.prod(moduli) != self.modulus:
            return False
        if any(c != self.n0 % p for c, p in self.congruences):
            return False
        if self.base_primes and self.N < 2 * max(p for p, _ in self.base_primes):
            return False
        expected = [h for h in range(1, self.N + 1)
                    if all(h % p for p, _ in self.base_primes)]
        if [hole.h for hole in self.holes] != expected:
            return False
        return self.certificate().check()

    def to_dict(self):
        return {"kind": "CoverPlan", "poly": str(self.f), "N": self.N,
                "base_primes": [{"p": str(p), "anchor": str(z)} for p, z in self.base_primes],
                "holes": [{"h": x.h, "q": str(x.q), "target": str(x.target),
                           "partner": x.partner} for x in self.holes],
                "modulus": str(self.modulus), "n0": str(self.n0),
                "predicted_holes": self.predicted_holes}

    @classmethod
    def from_dict(cls, d):
        return cls(IntPoly.parse(d["poly"]), int(d["N"]),
                   tuple((int(b["p"]), int(b["anchor"])) for b in d["base_primes"]),
                   tuple(Hole(int(x["h"]), int(x["q"]), int(x["target"]), int(x["partner"]))
                         for x in d["holes"]),
                   int(d["modulus"]), int(d["n0"]), float(d.get("predicted_holes", math.nan)))

    def dumps(self):
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))


def base_prime_candidates(f, N):
    """Primes p <= N/2 dividing some value of f, ascending."""
    return [p for p in sieve(N // 2).tolist() if has_root_mod_p(f, p)]


def build_cover(f, N, sn_oversample=1.0, harvest=None):
    """Chinese-remainder plan making f(n+1), ..., f(n+N) a block for n = n0 mod M.

    Base primes are taken from the prime divisors of f in ascending order
    until the exact number of uncovered offsets (holes) is at most
    #S_N / sn_oversample; each hole then receives its own harvested prime
    with a close root pair.
    """
    if f.degree not in (2, 3):
        raise PreconditionFailed("cover construction needs degree 2 or 3")
    if classify(f).reducible:
        raise PreconditionFailed("cover construction needs an irreducible polynomial")
    if N < 4:
        raise PreconditionFailed("N must be >= 4")
    if sn_oversample < 1:
        raise PreconditionFailed("sn_oversample must be >= 1")
    if harvest is None:
        harvest = harvest_sn(f, N)
    budget = len(harvest.pairs)
    candidates = base_prime_candidates(f, N)
    if not candidates:
        raise NoBasePrimes(f"no prime divisor of f in [2, {N // 2}]")

    holes = list(range(1, N + 1))
    chosen = []
    for p in candidates:
        chosen.append(p)
        holes = [h for h in holes if h % p]
        if len(holes) * sn_oversample <= budget:
            break
    else:
        raise InsufficientHarvest(
            f"{len(holes)} holes but only {budget} harvested primes at N = {N}")

    base = tuple((p, roots_mod_p(f, p).roots[0]) for p in chosen)
    predicted = N * math.prod(1 - 1 / p for p in chosen) + 2 ** len(chosen)
    assigned = []
    for h, pair in zip(holes, harvest.pairs):
        if 2 * h <= N:
            assigned.append(Hole(h, pair.p, pair.z_minus, h + pair.r))
        else:
            assigned.append(Hole(h, pair.p, pair.z_plus, h - pair.r))
    plan = CoverPlan(f, N, base, tuple(assigned), 1, 0, predicted)
    n0, M = solve_crt(plan.congruences)
    plan = CoverPlan(f, N, base, tuple(assigned), M, n0, predicted)
    for j in range(3):
        try:
            verify_block(f, n0 + j * M, N)
        except (IsolatedOffset, ZeroValue) as exc:
            raise LemmaViolation(f"cover plan failed verification at n0 + {j}M: {exc}") from exc
    return plan


def find_cover(f, n_max=5000, n_min=4, step=None, sn_oversample=1.0):
    """Build a plan at the smallest feasible N in [n_min, n_max] (scanning by ``step``)."""
    step = step or 1
    last = None
    for N in range(n_min, n_max + 1, step):
        try:
            return build_cover(f, N, sn_oversample)
        except (InsufficientHarvest, NoBasePrimes) as exc:
            last = exc
    raise InsufficientHarvest(f"no feasible N up to {n_max}: {last}")
