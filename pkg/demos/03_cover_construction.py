"""Build a Chinese-remainder cover: n such that no value among
f(n+1), ..., f(n+N) is coprime to all the others."""

from polyblocks import IntPoly, find_cover, harvest_sn, verify_block

f = IntPoly.parse("1,0,1")

# Large primes with close roots.  These cover the offsets that the small
# base primes miss.
for N in (500, 1000, 2000):
    h = harvest_sn(f, N)
    print(f"N={N:5d}  #S_N={len(h.pairs):4d}  ratio {float(h.count_ratio):.4f}")

plan = find_cover(f)
print("smallest feasible N:", plan.N)
print("base primes:", [p for p, _ in plan.base_primes])
print("holes:", len(plan.holes), " modulus bits:", plan.modulus.bit_length())

# The block property only depends on n mod M.
for j in range(3):
    w = verify_block(f, plan.n0 + j * plan.modulus, plan.N)
    print(f"n0 + {j}M verified; offset 1 shares {w.partners[1][1]} with offset {w.partners[1][0]}")

with open("plan.json", "w") as fh:
    fh.write(plan.dumps())
print("saved plan.json; re-check with: polyblocks verify --plan plan.json")
