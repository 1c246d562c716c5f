# Divisors of integer polynomials in a residue class mod S(x).
# The degree gate is 3*deg(S) >= deg(N), the analogue of S**3 > N.

from fractions import Fraction

from resdiv.algorithms import divisors_poly
from resdiv.polynomials import Poly, poly_sqrt
from resdiv.rings import RING_ZX
from resdiv.syntax import format_element, parse_element

# coefficients are listed lowest degree first
p = Poly([1, 0, 1])        # 1 + x^2
q = Poly([3, 1])           # 3 + x
print(format_element(p * q), "=", f"({format_element(p)})*({format_element(q)})")

# rational coefficients are fine inside the arithmetic; instances
# themselves must be integral
half = Poly([Fraction(1, 2), 1])
print("(1/2 + x)^2 =", format_element(half * half))

# exact square root, or None when the input is not a square
print("sqrt of x^2+2x+1:", format_element(poly_sqrt(Poly([1, 2, 1]))))
print("sqrt of x^2+2x+2:", poly_sqrt(Poly([2, 2, 1])))

# a planted product: dv = S*f + r1 times cof = S*g + r2
S = parse_element("1 + x^2", RING_ZX)
f, g = parse_element("2 + x", RING_ZX), parse_element("-1 + x", RING_ZX)
r1, r2 = parse_element("x", RING_ZX), parse_element("3", RING_ZX)
dv = S * f + r1
cof = S * g + r2
N = dv * cof
print("N =", format_element(N))

report = divisors_poly(N, S, r1)
print("divisors congruent to x mod 1+x^2:")
for d in report.divisors:
    print("  ", format_element(d))
assert dv in report.divisors

# non-monic moduli need the possible leading coefficients of a divisor.
# For S = 2x^2 + ... the search tries each value in the list as the
# candidate top coefficient ratio.
S2 = parse_element("1 + 2*x^2", RING_ZX)
dv2 = S2 * parse_element("1 + x", RING_ZX) + parse_element("x", RING_ZX)
N2 = dv2 * (S2 * parse_element("2 - x", RING_ZX) + parse_element("1", RING_ZX))
report2 = divisors_poly(N2, S2, parse_element("x", RING_ZX), lead_list=(-2, -1, 1, 2))
print("non-monic run:", [format_element(d) for d in report2.divisors])
assert dv2 in report2.divisors
