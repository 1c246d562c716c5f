"""Per-row candidate gamma values and the exact two-equation solver.

Each chain row (a_i, b_i, c_i) contributes candidates gamma = c_i + lam*S.
In the quadratic rings lam ranges over a disk (enumerate_residues); in Z[x]
the possible leading coefficients of a_i*f + b_i*g pin down a finite set of
shift polynomials (poly_rhs_candidates).  For every candidate, solve_system
intersects the line a_i*x + b_i*y = gamma with the product equation
(S*x + r)(S*y + r') = N and keeps only exactly verified ring solutions.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .polynomials import Poly
from .rings import (
    Element,
    QuadInt,
    _parity_ok,
    exact_div,
    ring_sqrt,
    ring_zero,
)
from .remseq import ProblemInstance


class SolutionPair(NamedTuple):
    x: Element
    y: Element


def candidate_radius(d: int) -> int:
    """Sweep radius for the quadratic ring of discriminant-root d.

    Candidates gamma satisfy normsq(gamma) < radius^2 * normsq(S); the
    Gaussian case needs far less slack than the other four rings.
    """
    return 12 if d == -1 else 530


def enumerate_residues(c: QuadInt, S: QuadInt, rbound: int, ring) -> list[QuadInt]:
    """All gamma = c + lam*S with normsq(gamma) < rbound^2 * normsq(S).

    c must already be reduced mod S (|c| <= |S|), which confines lam to the
    disk |lam| < rbound + 1.  Reference implementation: plain lattice walk
    over the half-coordinate box with a final exact norm test.  Sorted by
    (normsq, u, v) so downstream "first hit" bookkeeping is reproducible.
    """
    if not ring.is_quad:
        raise ValueError("enumerate_residues is only defined for quadratic rings")
    d = ring.d
    n_s = S.normsq()
    limit = rbound * rbound * n_s
    box = 4 * (rbound + 1) * (rbound + 1)
    out = []
    vmax = isqrt(box // -d)
    for v in range(-vmax, vmax + 1):
        rem = box + d * v * v
        if rem < 0:
            continue
        umax = isqrt(rem)
        for u in range(-umax, umax + 1):
            if not _parity_ok(u, v, d):
                continue
            gamma = c + QuadInt(u, v, d) * S
            if gamma.normsq() < limit:
                out.append(gamma)
    out.sort(key=lambda g: (g.normsq(), g.u, g.v))
    return out


def poly_rhs_candidates(c: Poly, a: Poly, b: Poly, inst: ProblemInstance) -> list[Poly]:
    """Candidate gammas for one Z[x] chain row.

    gamma = a*f + b*g mod S for a solution pair forces the coefficient of
    x^(deg S) in gamma to be lead(a*f + b*g)/lead(S) whenever that product
    reaches degree deg S.  Writing dL for a divisor of lead(N)/lead(S)^2
    (the leading coefficient of f; the cofactor side then has
    lead g = M/dL), the possible shifts p above the reduced c are:

        (lead(a)*dL + lead(b)*(M/dL)) / lead(S)     both terms at top degree
        lead(a)*dL / lead(S)                        only the a*f term
        lead(b)*(M/dL) / lead(S)                    only the b*g term

    over all signed dL in the instance lead list, plus the unshifted c.
    The set is a superset of what a degree analysis would keep; spurious
    candidates are discarded by the exact solver.
    """
    if inst.lead_list is None:
        raise ValueError("poly_rhs_candidates requires a Z[x] instance")
    cands = {c}
    leads = inst.lead_list
    if leads:
        l_s = inst.S.lead
        m = inst.N.lead // (inst.S.lead * inst.S.lead)
        la, lb = a.lead, b.lead
        for d_l in leads:
            if m % d_l:
                continue
            d_m = m // d_l
            shifts = [la * d_l + lb * d_m]
            if a:
                shifts.append(la * d_l)
            if b:
                shifts.append(lb * d_m)
            for num in shifts:
                p = Fraction(num) / Fraction(l_s)
                if p:
                    cands.add(c + Poly.constant(p) * inst.S)
    ordered = sorted(cands, key=lambda g: (g.degree if g else -1, g.coeffs))
    return ordered


def _accept(x, y, inst: ProblemInstance) -> SolutionPair | None:
    """Exact verification gate shared by every solution path.

    The product identity is checked unconditionally.  In Z[x] the chain
    lives in Q[x] and r' may be a rational polynomial, so y itself is
    allowed to be rational; what must be integral are x, the divisor
    S*x + r, and the cofactor S*y + r'.
    """
    dv = inst.S * x + inst.r
    cof = inst.S * y + inst.rPrime
    if dv * cof != inst.N:
        return None
    if inst.ring.is_poly:
        if not (x.is_integral() and dv.is_integral() and cof.is_integral()):
            return None
    return SolutionPair(x, y)


def solve_system(a, b, gamma, inst: ProblemInstance) -> list[SolutionPair]:
    """Solve {a*x + b*y = gamma, (S*x + r)(S*y + r') = N} exactly.

    With b != 0, eliminating y gives a quadratic in x:

        -S^2*a * x^2 + (S^2*gamma + S*r'*b - S*r*a) * x
                     + (S*r*gamma + b*(r*r' - N))   = 0

    solved by radical with an exact square root in the ring (no solutions
    when the discriminant is not a perfect square).  Degenerate rows fall
    back to the obvious linear solve.  Every candidate pair passes through
    the verification gate before being returned.
    """
    ring = inst.ring
    S, r, rp, N = inst.S, inst.r, inst.rPrime, inst.N
    out: list[SolutionPair] = []
    if not a and not b:
        return out

    if not a or not b:
        if not a:
            y = exact_div(gamma, b, ring)
            if y is None:
                return out
            cof = S * y + rp
            if not cof:
                return out
            dv = exact_div(N, cof, ring)
            if dv is None:
                return out
            x = exact_div(dv - r, S, ring)
        else:
            x = exact_div(gamma, a, ring)
            if x is None:
                return out
            dv = S * x + r
            if not dv:
                return out
            cof = exact_div(N, dv, ring)
            if cof is None:
                return out
            y = exact_div(cof - rp, S, ring)
        if x is None or y is None:
            return out
        pair = _accept(x, y, inst)
        return [pair] if pair else out

    a2 = -(S * S * a)
    a1 = S * S * gamma + S * rp * b - S * r * a
    a0 = S * r * gamma + b * (r * rp - N)
    disc = a1 * a1 - 4 * a2 * a0
    root = ring_sqrt(disc, ring)
    if root is None:
        return out
    seen = set()
    for signed in (root, -root):
        x = exact_div(-a1 + signed, 2 * a2, ring)
        if x is None:
            continue
        y = exact_div(gamma - a * x, b, ring)
        if y is None:
            continue
        pair = _accept(x, y, inst)
        if pair and pair not in seen:
            seen.add(pair)
            out.append(pair)
    return out


def trivial_divisor_check(inst: ProblemInstance) -> list[SolutionPair]:
    """The two solutions the sweep cannot see: x = 0 and y = 0.

    x = 0 means the divisor is r itself; y = 0 means the cofactor is r'
    (so the divisor is N/r').  Both are checked by exact division and run
    through the same acceptance gate as everything else.
    """
    ring = inst.ring
    S, r, rp, N = inst.S, inst.r, inst.rPrime, inst.N
    out: list[SolutionPair] = []

    zero = ring_zero(ring)
    cof0 = exact_div(N, r, ring)
    if cof0 is not None:
        y0 = exact_div(cof0 - rp, S, ring)
        if y0 is not None:
            pair = _accept(zero, y0, inst)
            if pair:
                out.append(pair)

    if rp:
        dv1 = exact_div(N, rp, ring)
        if dv1 is not None:
            x1 = exact_div(dv1 - r, S, ring)
            if x1 is not None:
                pair = _accept(x1, zero, inst)
                if pair and pair not in out:
                    out.append(pair)
    return out
