"""How many primes divide some value of f?  Compare with delta_f * Li(x)."""

from polyblocks import IntPoly, companion, enumerate_pf
from polyblocks.primes import prime_pi
from polyblocks.primestream import pf_primes

X = 10**6

for text, name in [("1,0,1", "X^2+1"), ("1,-3,0,1", "X^3-3X+1"), ("1,-1,0,1", "X^3-X+1")]:
    f = IntPoly.parse(text)
    r = enumerate_pf(f, X)
    print(f"{name:10s} group delta {str(r.delta):4s} count {r.count:6d} "
          f"ratio {r.ratio:.4f}  delta*Li {r.expected:9.1f}  rel.err {r.relative_error:+.4f}")

# The companion shares the splitting field of f, but its prime divisors need
# not have the same density.  For an S3 cubic only the identity fixes a root
# difference, so the companion's ratio is near 1/6.
for text, name in [("1,0,1", "X^2+1"), ("1,-1,0,1", "X^3-X+1")]:
    g = companion(IntPoly.parse(text)).poly
    count = len(pf_primes(g, X))
    print(f"companion of {name:9s} ratio {count / prime_pi(X):.4f}")
