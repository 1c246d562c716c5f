"""
Parametric record families
==========================

Two infinite families keep many divisors in one residue class while S
stays above the cube-root gate, plus a brute search for small records.
"""

from resdiv.families import (
    cohen_instance,
    search_records,
    seven_signed_instance,
    verify_family,
)

# six positive divisors congruent to 1 mod S, for every level
print("level    N            S      alpha   positives")
for level in range(3, 9):
    fi = cohen_instance(level)
    rep = verify_family(fi)
    assert rep.ok
    print(f"{level:>5} {fi.N:>12} {fi.S:>6}   {fi.alpha:.4f}   {len(rep.positive)}")

# the level-3 member is small enough to eyeball
rep = verify_family(cohen_instance(3))
print("level 3 divisors:", rep.positive)

# a second family with seven divisors once signs are allowed
print("\nbase     N            S      signed divisors")
for base in range(2, 7):
    fi = seven_signed_instance(base)
    rep = verify_family(fi)
    assert rep.ok and len(rep.divisors) == 7
    print(f"{base:>4} {fi.N:>12} {fi.S:>6}   {rep.divisors}")

# small-modulus search: find (N, S) with at least 4 positive divisors
# in class 1 mod S, scanning S = 3..40 with a bounded check budget
out = search_records(range(3, 41), target=4, max_checks=1500)
print(f"\nsearch: {out.checked} candidates checked, exhausted={out.exhausted}")
for fi in out.hits[:5]:
    print(f"  hit N={fi.N} S={fi.S} positives={fi.expected_positive}")
