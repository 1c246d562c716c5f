"""
Divisor search in imaginary quadratic rings
===========================================
"""

from resdiv.algorithms import find_divisors
from resdiv.remseq import build_instance
from resdiv.rings import RING_ZI, QuadInt, quad_div, quad_ring

# Gaussian integers first.  Elements print in the w-basis, where w is
# the square root of the discriminant d (so w = i when d = -1).
a = QuadInt.from_parts(7, 3, -1)   # 7+3i
b = QuadInt.from_parts(2, 1, -1)   # 2+i
q, r = quad_div(a, b)
print(f"({a}) = ({b})*({q}) + ({r})")
print("norms shrink under division:", r.normsq(), "<=", b.normsq(), "/ 2")

# plant a product with a known divisor in a residue class:
# dv = S*x + r0 divides N = dv*cof, and cof = S*y + r2
S = QuadInt.from_parts(14, 9, -1)   # norm 277, prime, so gcd(N, S) = 1
x, y = QuadInt.from_parts(3, -2, -1), QuadInt.from_parts(-1, 4, -1)
r0, r2 = QuadInt.from_parts(4, 1, -1), QuadInt.from_parts(2, -3, -1)
dv = S * x + r0
cof = S * y + r2
N = dv * cof
print("N =", N, " S =", S, " class:", r0)

inst = build_instance(RING_ZI, N, S, r0)
report = find_divisors(inst)
print("divisors found:", [str(d) for d in report.divisors])
assert dv in report.divisors
print("planted divisor", dv, "recovered")

# the same machinery runs in the other Euclidean imaginary quadratic
# rings: d in {-2, -3, -7, -11}.  In d = -3, -7 and -11 the ring
# includes half-integer coordinates like 1/2+1/2*w.
ring = quad_ring(-7)
S7 = QuadInt.from_parts(9, 2, -7)
dv7 = S7 * QuadInt.from_parts(2, 1, -7) + QuadInt.from_parts(1, 1, -7)
cof7 = S7 * QuadInt.from_parts(1, -1, -7) + QuadInt.from_parts(3, 0, -7)
inst7 = build_instance(ring, dv7 * cof7, S7, QuadInt.from_parts(1, 1, -7))
report7 = find_divisors(inst7)
print(f"{ring.name}: divisors =", [str(d) for d in report7.divisors])
assert dv7 in report7.divisors
for d in report7.divisors:
    q, rem = quad_div(inst7.N, d)
    assert not rem
print("all reported elements divide N exactly")

# operation counts scale with the chain length, which is logarithmic
# in the norm of S
print("ops:", report.stats["candidates"], "candidates,",
      report.stats["solves"], "system solves in",
      report.stats["t"], "chain rows")
