"""Companion polynomials and close roots modulo a prime."""

from polyblocks import IntPoly, classify, close_root_pair, companion, roots_mod_p
from polyblocks.errors import LemmaViolation, PreconditionFailed

# The companion polynomial has the root differences of f as its roots.
# For X^2 + 1 the differences are +-2i, so the companion is X^2 + 4.
f = IntPoly.parse("1,0,1")
print("f          ", f.pretty())
print("companion  ", companion(f).poly.pretty())
print("classify   ", classify(f))

# A prime dividing ftilde(r) brings two roots of f exactly r apart.
g = companion(f).poly
for p in (5, 13, 17, 29):
    r = next(r for r in range(1, p) if g(r) % p == 0)
    pair = close_root_pair(f, p, r, g)
    print(f"p={p:3d}  r={r:3d}  roots {pair.z_minus} and {pair.z_plus}")

# Degree four breaks this: 3 divides ftilde(1) for X^4 + 1 with no root mod 3.
quartic = IntPoly.parse("1,0,0,0,1")
print("X^4+1: ftilde(1) =", companion(quartic).poly(1), " roots mod 3:", roots_mod_p(quartic, 3).roots)
try:
    close_root_pair(quartic, 3, 1)
except PreconditionFailed as exc:
    print("refused:", exc)

# Cubics irreducible mod 3 fail the same way: X^3 - X + 1 has roots a, a+1, a+2
# in F_27, so 3 | ftilde(1) = 27, but none of them lies in F_3.
cubic = IntPoly.parse("1,-1,0,1")
try:
    close_root_pair(cubic, 3, 1)
except LemmaViolation as exc:
    print("X^3-X+1 at p=3:", exc)
