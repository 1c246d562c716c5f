"""Top-level divisor search: chain, sweep, and verified report assembly.

The search finds every ring divisor d of N with d = r (mod S), i.e. every
solution of (S*x + r)(S*y + r') = N, provided the size gate holds
(normsq(S)^3 > normsq(N), resp. 3*deg S >= deg N).  The two solutions the
row sweep cannot reach (x = 0 and y = 0) are checked directly first; then
each chain row contributes candidate gammas that the exact solver turns
into verified pairs.

Rational instances are run inside the Gaussian integers: the congruence,
divisibility, and gate conditions all transfer verbatim, and the rational
divisors are exactly the Gaussian hits with zero imaginary part.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import fastscan
from .remseq import ProblemInstance, build_chain, build_instance
from .rings import RING_ZI, RING_ZX, Element, RingId, exact_div
from .solver import (
    candidate_radius,
    enumerate_residues,
    poly_rhs_candidates,
    solve_system,
    trivial_divisor_check,
)

Witness = tuple[Element, Element, tuple[int, int]]


@dataclass(frozen=True)
class DivisorReport:
    """Sorted divisors, a witness per divisor, and run counters.

    witnesses[d] = (x, y, (i, j)): the solution pair behind d and where it
    was first discovered (chain row i, j-th accepted pair of that row; the
    two trivial checks count as row 0).  stats carries t, candidates
    (gammas handed to the exact solver), solves (accepted pairs before
    deduplication), and seconds.
    """

    divisors: tuple[Element, ...]
    witnesses: dict[Element, Witness]
    stats: dict[str, int | float]


def _verify_report(inst: ProblemInstance, found: dict[Element, Witness]) -> None:
    for dv in found:
        quot = exact_div(inst.N, dv, inst.ring)
        cls = exact_div(dv - inst.r, inst.S, inst.ring)
        ok = quot is not None and cls is not None
        if ok and inst.ring.is_poly:
            ok = dv.is_integral() and quot.is_integral() and cls.is_integral()
        if not ok:
            raise AssertionError(f"internal consistency: reported divisor {dv} fails re-check")


def _sort_key(ring: RingId):
    if ring.is_quad:
        return lambda dv: (dv.normsq(), dv.u, dv.v)
    if ring.is_poly:
        return lambda dv: (dv.degree, dv.coeffs)
    return lambda dv: dv


def find_divisors(
    inst: ProblemInstance,
    *,
    rbound: int | None = None,
    engine: str = "auto",
) -> DivisorReport:
    """Run the full search on a built instance.

    engine selects the quadratic-ring candidate enumeration: "fast" (the
    vectorized filter, default under "auto") or "exact" (the reference
    disk walk; only sensible at a reduced rbound outside the Gaussian
    ring).  Both feed the same exact solver and report identically.
    """
    if engine not in ("auto", "fast", "exact"):
        raise ValueError(f"unknown engine {engine!r}")
    t0 = time.perf_counter()
    chain = build_chain(inst)
    found: dict[Element, Witness] = {}
    ncand = 0
    nacc = 0

    for j, pair in enumerate(trivial_divisor_check(inst)):
        dv = inst.S * pair.x + inst.r
        found.setdefault(dv, (pair.x, pair.y, (0, j)))
        nacc += 1

    pool = None
    if inst.ring.is_quad and engine != "exact":
        pool = fastscan.get_pool(inst.ring.d, rbound)
    radius = rbound if rbound is not None else (
        candidate_radius(inst.ring.d) if inst.ring.is_quad else None
    )

    for i in range(1, chain.t + 1):
        a, b, c = chain.a[i], chain.b[i], chain.c[i]
        if inst.ring.is_poly:
            gammas = poly_rhs_candidates(c, a, b, inst)
        elif pool is not None:
            gammas = fastscan.fast_row_candidates(a, b, c, inst, pool)
        else:
            gammas = enumerate_residues(c, inst.S, radius, inst.ring)
        ncand += len(gammas)
        j = 0
        for gamma in gammas:
            for pair in solve_system(a, b, gamma, inst):
                dv = inst.S * pair.x + inst.r
                found.setdefault(dv, (pair.x, pair.y, (i, j)))
                j += 1
                nacc += 1

    _verify_report(inst, found)
    divisors = tuple(sorted(found, key=_sort_key(inst.ring)))
    stats = {
        "t": chain.t,
        "candidates": ncand,
        "solves": nacc,
        "seconds": time.perf_counter() - t0,
    }
    return DivisorReport(divisors, found, stats)


def divisors_quadratic(
    ring: RingId,
    N,
    S,
    r,
    *,
    rbound: int | None = None,
    engine: str = "auto",
) -> DivisorReport:
    if not ring.is_quad:
        raise ValueError("divisors_quadratic needs a quadratic ring")
    return find_divisors(build_instance(ring, N, S, r), rbound=rbound, engine=engine)


def divisors_rational(N: int, S: int, r: int, *, engine: str = "auto") -> DivisorReport:
    """All integer divisors d of N with d = r (mod S), both signs.

    Runs the Gaussian search on the same numbers.  d - r = S*x with d, r, S
    rational forces x rational, so filtering the Gaussian report to real
    divisors loses nothing and the witnesses project to integers.
    """
    inst = build_instance(RING_ZI, int(N), int(S), int(r))
    rep = find_divisors(inst, engine=engine)
    divisors = []
    witnesses: dict[Element, Witness] = {}
    for dv in rep.divisors:
        if not dv.is_rational():
            continue
        x, y, at = rep.witnesses[dv]
        k = dv.rational_part()
        divisors.append(k)
        witnesses[k] = (x.rational_part(), y.rational_part(), at)
    divisors.sort()
    return DivisorReport(tuple(divisors), witnesses, rep.stats)


def divisors_poly(
    N,
    S,
    r,
    *,
    lead_list: list[int] | tuple[int, ...] | None = None,
) -> DivisorReport:
    inst = build_instance(RING_ZX, N, S, r, lead_list=lead_list)
    return find_divisors(inst)
