"""Exact decision of whether blocks of a given length exist, g_f search,
G_f tail scans, and an independent brute-force block scanner.

Two values f(n+i), f(n+j) can only share a prime dividing
Res_X(f(X), f(X + j - i)), so existence reduces to a finite problem: pick at
most one residue class n mod p per relevant prime so that every offset sits
in a chosen class together with another offset.  Moduli are distinct primes,
so any such choice lifts to infinitely many n by CRT.
"""

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .cover import build_cover, solve_crt, verify_block
from .errors import BudgetExceeded, InsufficientHarvest, PreconditionFailed
from .intpoly import classify, horner, resultant_coeffs, taylor_shift
from .modpoly import roots_mod_p
from .primes import factorint

DEFAULT_BUDGET_NODES = 10**6
DEFAULT_MAX_PRIMES = 10**4


@dataclass(frozen=True)
class ExistenceCertificate:
    k: int
    exists: bool
    residue_choices: tuple = ()   # (p, c): n = c mod p
    relevant_primes: tuple = ()
    n: int = None                 # least nonnegative reconstruction with nonzero values
    nodes: int = 0

    @property
    def modulus(self):
        return math.prod(p for p, _ in self.residue_choices)

    def to_dict(self):
        return {"kind": "ExistenceCertificate", "k": self.k, "exists": self.exists,
                "residue_choices": [{"p": str(p), "c": str(c)} for p, c in self.residue_choices],
                "relevant_primes": [str(p) for p in self.relevant_primes],
                "n": None if self.n is None else str(self.n), "nodes": self.nodes}

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["k"]), bool(d["exists"]),
                   tuple((int(x["p"]), int(x["c"])) for x in d["residue_choices"]),
                   tuple(int(p) for p in d["relevant_primes"]),
                   None if d.get("n") is None else int(d["n"]), int(d.get("nodes", 0)))


def relevant_primes(f, k):
    """Every prime that can divide two values of f at distance < k."""
    lead_primes = set(factorint(f.lead)) if abs(f.lead) > 1 else set()
    primes = set(lead_primes)
    for d in range(1, k):
        res = resultant_coeffs(f.coeffs, taylor_shift(f.coeffs, d))
        if res == 0:
            raise PreconditionFailed(f"f(X) and f(X+{d}) share a factor; no finite prime reduction")
        # the resultant is a_k^2 d^deg ftilde(d): strip the known small factors first
        for q in lead_primes | set(factorint(d) if d > 1 else ()):
            primes.add(q)
            while res % q == 0:
                res //= q
        if abs(res) > 1:
            primes.update(factorint(res))
    return sorted(primes)


def residue_options(f, p, k):
    """Map class c (n = c mod p) -> bitmask of offsets h in [1, k] with p | f(c + h),
    keeping only classes hitting at least two offsets."""
    roots = roots_mod_p(f, p).roots
    masks = {}
    for z in roots:
        for h in range(1, k + 1):
            c = (z - h) % p
            masks[c] = masks.get(c, 0) | (1 << (h - 1))
    return {c: m for c, m in sorted(masks.items()) if m & (m - 1)}


def _drop_dominated(options):
    """Per prime, drop class masks contained in another class mask."""
    out = []
    masks = sorted(set(m for _, m in options), key=lambda m: -bin(m).count("1"))
    keep = []
    for m in masks:
        if not any(m | other == other for other in keep):
            keep.append(m)
    first_class = {}
    for c, m in options:
        first_class.setdefault(m, c)
    for m in keep:
        out.append((first_class[m], m))
    return out


@dataclass
class _Search:
    k: int
    options_by_offset: list
    budget: int
    minimal: bool
    f: object = None
    nodes: int = 0
    best: tuple = None
    best_n: int = None
    full: int = 0
    stack: list = field(default_factory=list)

    def run(self):
        self.full = (1 << self.k) - 1
        self._rec(0, frozenset())
        return self.best

    def _least_n(self):
        n, M = solve_crt([(c, p) for p, c in self.stack])
        return n, M

    def _rec(self, covered, used):
        if covered == self.full:
            n, M = self._least_n()
            n = _first_nonzero(self.f, n, M, self.k)
            if self.best_n is None or n < self.best_n:
                self.best = tuple(sorted(self.stack))
                self.best_n = n
            return not self.minimal
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        if self.minimal and self.best_n is not None and self.stack:
            if self._least_n()[0] >= self.best_n:
                return False
        # most constrained uncovered offset
        pick_opts = None
        for h in range(self.k):
            if covered >> h & 1:
                continue
            opts = [o for o in self.options_by_offset[h] if o[0] not in used]
            if pick_opts is None or len(opts) < len(pick_opts):
                pick_opts = opts
                if not opts:
                    return False
        pick_opts.sort(key=lambda o: -bin(o[2] & ~covered).count("1"))
        for p, c, m in pick_opts:
            self.stack.append((p, c))
            done = self._rec(covered | m, used | {p})
            self.stack.pop()
            if done:
                return True
        return False


def _first_nonzero(f, n, M, k):
    while any(horner(f.coeffs, n + h) == 0 for h in range(1, k + 1)):
        n += M
    return n


def decide_block(f, k, budget_nodes=DEFAULT_BUDGET_NODES, max_primes=DEFAULT_MAX_PRIMES,
                 minimal=False):
    """Decide exactly whether some n makes f(n+1), ..., f(n+k) a block.

    With ``minimal=True`` every cover is explored (with branch and bound on
    the CRT solution) and the certificate reconstructs the least such n >= 0.
    """
    if k < 2:
        raise PreconditionFailed("block length must be >= 2")
    primes = relevant_primes(f, k)
    if len(primes) > max_primes:
        raise BudgetExceeded(f"{len(primes)} relevant primes exceed the limit {max_primes}")
    by_offset = [[] for _ in range(k)]
    for p in primes:
        opts = list(residue_options(f, p, k).items())
        if not minimal:
            opts = _drop_dominated(opts)
        for c, m in opts:
            for h in range(k):
                if m >> h & 1:
                    by_offset[h].append((p, c, m))
    search = _Search(k, by_offset, budget_nodes, minimal, f)
    best = search.run()
    if best is None:
        return ExistenceCertificate(k, False, (), tuple(primes), None, search.nodes)
    return ExistenceCertificate(k, True, best, tuple(primes), search.best_n, search.nodes)


def certificate_witness(f, cert):
    """Reconstructed block for a positive certificate, verified by gcds."""
    return verify_block(f, cert.n, cert.k)


# --- g_f and G_f -----------------------------------------------------------

@dataclass(frozen=True)
class GfResult:
    gf: int            # None when unknown
    table: dict        # k -> True / False / None (unknown)
    witness_n: int = None

    def to_dict(self):
        return {"gf": self.gf, "table": {str(k): v for k, v in self.table.items()},
                "witness_n": None if self.witness_n is None else str(self.witness_n)}


def gf_search(f, k_max, budget_nodes=DEFAULT_BUDGET_NODES, minimal_witness=True):
    """Smallest k <= k_max admitting a block; unknown if an earlier k ran out of budget."""
    if k_max < 2:
        raise PreconditionFailed("k_max must be >= 2")
    table = {}
    unknown = False
    for k in range(2, k_max + 1):
        try:
            cert = decide_block(f, k, budget_nodes)
        except BudgetExceeded:
            table[k] = None
            unknown = True
            continue
        table[k] = cert.exists
        if cert.exists:
            if minimal_witness:
                try:
                    cert = decide_block(f, k, budget_nodes, minimal=True)
                except BudgetExceeded:
                    pass
            return GfResult(None if unknown else k, table, cert.n)
    return GfResult(None, table)


@dataclass(frozen=True)
class TailReport:
    k_max: int
    table: dict          # k -> True / False / None
    tail_start: int      # smallest K0 with every k in [K0, k_max] succeeding, or None
    gaps: tuple          # failing or unknown k above the first success
    note: str = ("heuristic: contiguous success up to k_max only suggests an upper-bound "
                 "candidate for G_f; 'every k >= G_f' cannot be decided finitely")

    def to_dict(self):
        return {"k_max": self.k_max, "table": {str(k): v for k, v in self.table.items()},
                "tail_start": self.tail_start, "gaps": list(self.gaps), "note": self.note}


def gf_estimate_scan(f, k_max, budget_nodes=DEFAULT_BUDGET_NODES, use_cover=True):
    """Decide every k in [2, k_max]; a budget overrun falls back to the cover
    construction when f qualifies."""
    if k_max < 2:
        raise PreconditionFailed("k_max must be >= 2")
    coverable = use_cover and f.degree in (2, 3) and not classify(f).reducible
    table = {}
    for k in range(2, k_max + 1):
        try:
            table[k] = decide_block(f, k, budget_nodes).exists
        except BudgetExceeded:
            table[k] = None
            if coverable and k >= 4:
                try:
                    build_cover(f, k)
                    table[k] = True
                except (InsufficientHarvest, PreconditionFailed):
                    pass
    tail = None
    for k in range(k_max, 1, -1):
        if table[k] is True:
            tail = k
        else:
            break
    first = next((k for k in table if table[k] is True), None)
    gaps = () if first is None else tuple(k for k in table if k > first and table[k] is not True)
    return TailReport(k_max, table, tail, gaps)


# --- brute-force scan (independent of the prime reduction) -----------------------

def _int64_safe(f, n_max):
    bound = sum(abs(c) * (n_max + 1) ** i for i, c in enumerate(f.coeffs))
    return bound < 2**62


def first_blocks(f, ks, n_max, chunk=1 << 20):
    """For each k in ``ks``, the least n in [0, n_max] such that f(n+1), ..., f(n+k)
    is a block (None if none), found by taking gcds of every pair of values
    at distance < k.  Values must fit in 64 bits."""
    ks = sorted(set(ks))
    kmax = ks[-1]
    if not _int64_safe(f, n_max + kmax):
        raise PreconditionFailed("values exceed 64 bits; use sample_blocks")
    found = {k: None for k in ks}
    coeffs = [int(c) for c in f.coeffs]
    start = 0
    while start <= n_max and any(v is None for v in found.values()):
        stop = min(start + chunk, n_max + 1)   # windows n in [start, stop)
        m = np.arange(start + 1, stop + kmax, dtype=np.int64)
        vals = np.zeros_like(m)
        for c in reversed(coeffs):
            vals = vals * m + c
        zero = vals == 0
        vals = np.abs(vals)
        L = stop - start
        # share[d][i]: value i and value i+d have a common factor
        share = [None] + [np.gcd(vals[:-d], vals[d:]) > 1 for d in range(1, kmax)]
        for d in range(1, kmax):
            share[d] &= ~zero[:-d] & ~zero[d:]
        for k in ks:
            if found[k] is not None:
                continue
            ok = np.ones(L, dtype=bool)
            for h in range(1, k + 1):
                i0 = h - 1          # index of value n+h for window n = start
                cov = np.zeros(L, dtype=bool)
                for d in range(1, k - h + 1):
                    cov |= share[d][i0:i0 + L]
                for d in range(1, h):
                    cov |= share[d][i0 - d:i0 - d + L]
                cov &= ~zero[i0:i0 + L]
                ok &= cov
                if not ok.any():
                    break
            hits = np.flatnonzero(ok)
            if len(hits):
                found[k] = start + int(hits[0])
        start = stop
    return found


def sample_blocks(f, k, n_max, samples, seed=0):
    """Random witness scan: test ``samples`` uniformly drawn n in [0, n_max]."""
    rng = random.Random(seed)
    hits = []
    for _ in range(samples):
        n = rng.randrange(n_max + 1)
        vals = [horner(f.coeffs, n + h) for h in range(1, k + 1)]
        if 0 in vals:
            continue
        if all(any(math.gcd(v, w) > 1 for j, w in enumerate(vals) if j != i)
               for i, v in enumerate(vals)):
            hits.append(n)
    return sorted(hits)
