import json
import math
import random
import warnings
from pathlib import Path

import jsonschema
import pytest

from conftest import random_poly
from oracles import first_block_scan
from polyblocks import IntPoly, companion, decide_block, first_blocks, gf_estimate_scan, gf_search
from polyblocks.cover import is_block, verify_block
from polyblocks.errors import BudgetExceeded, PreconditionFailed
from polyblocks.search import (ExistenceCertificate, certificate_witness, relevant_primes,
                               residue_options, sample_blocks)

P = IntPoly.parse
SCHEMA = Path(__file__).resolve().parent.parent / "docs" / "schemas" / "existence_certificate.schema.json"


def _radical_divides(g, R):
    """Every prime factor of g divides R."""
    g = abs(g)
    while g > 1:
        d = math.gcd(g, R)
        if d == 1:
            return False
        while g % d == 0:
            g //= d
    return True


def test_prime_reduction_is_sound():
    rng = random.Random(17)
    for _ in range(200):
        f = random_poly(rng, rng.choice([2, 3]), -30, 30)
        g = companion(f).poly
        n, k = rng.randint(0, 10**6), rng.randint(2, 12)
        vals = [f(n + h) for h in range(1, k + 1)]
        for i in range(k):
            for j in range(i + 1, k):
                d = j - i
                common = math.gcd(vals[i], vals[j])
                R = f.lead**2 * d**f.degree * g(d)
                if common > 1 and vals[i] and vals[j] and R:
                    assert _radical_divides(common, R)


def test_relevant_primes_cover_resultant_primes():
    f = P("1,0,1")
    primes = set(relevant_primes(f, 6))
    g = companion(f).poly
    for d in range(1, 6):
        assert _radical_divides(d**2 * g(d), math.prod(primes))


def test_relevant_primes_refuse_shared_factor():
    assert relevant_primes(P("0,0,1"), 3) == [2]
    # X^2 - X = X(X - 1) shares X - 1 with (X + 1)^2 - (X + 1) = X(X + 1)
    with pytest.raises(PreconditionFailed):
        relevant_primes(P("0,-1,1"), 3)


def test_residue_options_match_scan():
    f = P("1,-3,0,1")
    for p in (3, 7, 19, 37):
        opts = residue_options(f, p, 6)
        for c in range(p):
            mask = sum(1 << (h - 1) for h in range(1, 7) if f(c + h) % p == 0)
            if bin(mask).count("1") >= 2:
                assert opts[c] == mask
            else:
                assert c not in opts


@pytest.mark.parametrize("poly, k, exists", [
    ("0,1", 16, False),
    ("0,1", 17, True),
    ("1,60,900", 3, False),
    ("1,0,1", 2, True),
])
def test_decide_examples(poly, k, exists):
    cert = decide_block(P(poly), k)
    assert cert.exists is exists
    if exists:
        assert verify_block(P(poly), cert.n, k).check()


def test_decide_minimal_classical():
    cert = decide_block(P("0,1"), 17, minimal=True)
    assert cert.n == 2183
    assert first_blocks(P("0,1"), [17], 3000)[17] == 2183


@pytest.mark.parametrize("poly", ["1,0,1", "1,-3,0,1", "1,2,0,3", "7,5,3"])
def test_minimal_witness_matches_scan(poly):
    f = P(poly)
    scan = first_blocks(f, range(2, 9), 20_000)
    for k in range(2, 9):
        cert = decide_block(f, k, minimal=True)
        assert cert.exists == (scan[k] is not None)
        if cert.exists:
            assert cert.n == scan[k]


def test_first_blocks_against_pure_python_scan():
    for poly in ("1,0,1", "1,-3,0,1", "3,1,2"):
        f = P(poly)
        scan = first_blocks(f, [2, 3, 4, 5], 600, chunk=97)
        for k in (2, 3, 4, 5):
            assert scan[k] == first_block_scan(f.coeffs, k, 600)


def test_decide_true_reconstructs_and_false_has_no_sample():
    rng = random.Random(99)
    for _ in range(12):
        f = random_poly(rng, rng.choice([2, 3]), -10, 10)
        for k in range(2, 7):
            try:
                cert = decide_block(f, k)
            except PreconditionFailed:
                break
            if cert.exists:
                assert certificate_witness(f, cert).check()
                M = cert.modulus
                assert is_block(f, cert.n + M, k)
            else:
                assert sample_blocks(f, k, 10**6, 2000, seed=k) == []


def test_certificate_json_roundtrip():
    cert = decide_block(P("0,1"), 17)
    d = json.loads(json.dumps(cert.to_dict()))
    jsonschema.validate(d, json.loads(SCHEMA.read_text()))
    assert ExistenceCertificate.from_dict(d) == cert


def test_gf_examples():
    r = gf_search(P("0,1"), 20)
    assert r.gf == 17 and r.witness_n == 2183
    assert all(r.table[k] is False for k in range(2, 17))
    r = gf_search(P("0,1"), 10)
    assert r.gf is None and set(r.table.values()) == {False}
    assert gf_search(P("1,0,1"), 10).gf == 2


def test_budget_gives_unknown():
    with pytest.raises(BudgetExceeded):
        decide_block(P("0,1"), 16, budget_nodes=10)
    r = gf_search(P("0,1"), 20, budget_nodes=10)
    assert r.gf is None and None in r.table.values()


def test_gscan_classical_tail():
    r = gf_estimate_scan(P("0,1"), 30)
    assert r.tail_start == 17 and r.gaps == ()
    assert all(r.table[k] is True for k in range(17, 31))
    assert "heuristic" in r.note


def test_gscan_degenerate():
    r = gf_estimate_scan(P("1,0,1"), 2)
    assert list(r.table) == [2]


def test_gscan_quadratic_monotone_tail():
    r = gf_estimate_scan(P("1,0,1"), 14)
    first = min(k for k, v in r.table.items() if v)
    assert r.gaps == tuple(k for k in range(first + 1, 15) if r.table[k] is not True)
    assert r.tail_start is not None


def test_upward_closure_reported():
    # upward closure is guaranteed only beyond G_f, so breaks are reported, not asserted
    for poly in ("1,0,1", "1,-3,0,1", "1,2,0,3"):
        table = first_blocks(P(poly), range(2, 12), 10_000)
        first = min(k for k, n in table.items() if n is not None)
        breaks = [k for k in table if k > first and table[k] is None]
        if breaks:
            warnings.warn(f"{poly}: no block found up to 10^4 for k in {breaks}")
