"""Smallest block lengths decided exactly, cross-checked by brute force."""

from polyblocks import IntPoly, decide_block, first_blocks, gf_estimate_scan, gf_search

# Consecutive integers: no block below length 17, and 2184..2200 is the first.
r = gf_search(IntPoly.parse("0,1"), 20)
print("f = X: g =", r.gf, " least n =", r.witness_n)

scan = gf_estimate_scan(IntPoly.parse("0,1"), 30)
print("every k in [%d, 30] admits a block; gaps %s" % (scan.tail_start, list(scan.gaps)))
print(scan.note)

# Least block start per length, exact search against a numpy gcd scan.
for text in ("1,0,1", "1,-3,0,1"):
    f = IntPoly.parse(text)
    scanned = first_blocks(f, range(2, 10), 20_000)
    for k in range(2, 10):
        cert = decide_block(f, k, minimal=True)
        print(f"{text:9s} k={k}  exact n={cert.n}  scan n={scanned[k]}")

# (1 + 30X)^2: any shared prime would divide 30, so no block of length 3.
print("(1+30X)^2, k=3:", decide_block(IntPoly.parse("1,60,900"), 3).exists)
