"""Problem instances and the remainder-triple chain (a_k, b_k, c_k).

The chain starts from a0 = S, b0 = 0, c0 = 0 and a1 = r'*r^-1 mod S, b1 = 1,
c1 = ((N - r*r')/S)*r^-1 mod S, then runs Euclidean division on the a-side
while carrying b and c along the same quotients:

    a_{k+1} = a_{k-1} - q_k*a_k   (the division remainder)
    b_{k+1} = b_{k-1} - q_k*b_k
    c_{k+1} = c_{k-1} - q_k*c_k  (mod S)

c_k is stored reduced mod S at every step; b_k is never reduced.  The chain
ends at the first zero a_t.  Every solution pair of (Sx+r)(Sy+r') = N
satisfies a_k*x + b_k*y = c_k (mod S) along the whole chain, which is what
the candidate sweep exploits.

For Z[x] instances the chain lives in Q[x]; exact rationals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import InvalidInstanceError
from .polynomials import Poly
from .rings import (
    Element,
    RingId,
    coerce_element,
    exact_div,
    is_unit,
    mod_inverse,
    reduce_mod,
    ring_div,
    ring_gcd,
    ring_one,
    ring_zero,
)


@dataclass(frozen=True)
class ProblemInstance:
    """A validated (ring, N, S, r) problem with its derived data.

    rPrime is N*r^-1 mod S.  gate_ok records whether the size hypothesis
    holds (normsq(S)^3 > normsq(N), resp. 3*deg S >= deg N); instances
    failing it are still processed, only the completeness/run-time guarantee
    lapses.  lead_list is the Z[x] leading-coefficient list: the signed
    divisors of lead(N)/lead(S)^2, empty when that quotient is not an
    integer, None for non-polynomial rings.
    """

    ring: RingId
    N: Element
    S: Element
    r: Element
    rPrime: Element
    lead_list: tuple[int, ...] | None
    gate_ok: bool


@dataclass(frozen=True)
class RemChain:
    """The chain triples; a[t] == 0 and len(a) == t + 1."""

    a: tuple[Element, ...]
    b: tuple[Element, ...]
    c: tuple[Element, ...]
    quotients: tuple[Element, ...]
    t: int

    @property
    def triples(self) -> tuple[tuple[Element, Element, Element], ...]:
        return tuple(zip(self.a, self.b, self.c))


def _signed_divisors(n: int) -> tuple[int, ...]:
    """All divisors of |n|, both signs, ascending."""
    n = abs(n)
    if n >= 1 << 64:
        raise InvalidInstanceError(
            "leading-coefficient quotient too large to factor; pass lead_list"
        )
    small = []
    big = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                big.append(n // k)
        k += 1
    pos = small + big[::-1]
    return tuple(sorted(-p for p in pos) + pos)


def _reduce_r(r, S, ring: RingId):
    """Reduce r mod S without leaving the residue class of the base ring.

    For Z and O_K the Euclidean remainder does this directly.  For Z[x] the
    class is r + S*Z[x], and Q[x]-division only preserves it when the
    quotient is integral; otherwise (possible for non-monic S with
    deg r >= deg S) there is no small representative and we reject.
    """
    if not ring.is_poly:
        return reduce_mod(r, S, ring)
    if r.degree < S.degree:
        return r
    q, rem = ring_div(r, S, ring)
    if q.is_integral():
        return rem
    raise InvalidInstanceError(
        "r cannot be reduced mod S inside Z[x]; supply r with deg r < deg S"
    )


def build_instance(
    ring: RingId,
    N,
    S,
    r,
    lead_list: list[int] | tuple[int, ...] | None = None,
) -> ProblemInstance:
    """Validate (N, S, r), reduce r, derive rPrime and the size-gate flag.

    Raises InvalidInstanceError when N or S is zero, S is a unit, the inputs
    are not integral (Z[x]), or gcd(N,S) / gcd(S,r) is not a unit.
    """
    N = coerce_element(N, ring)
    S = coerce_element(S, ring)
    r = coerce_element(r, ring)
    if not N or not S:
        raise InvalidInstanceError("N and S must be nonzero")
    if is_unit(S, ring):
        raise InvalidInstanceError("S must not be a unit")
    if ring.is_poly:
        if not (N.is_integral() and S.is_integral() and r.is_integral()):
            raise InvalidInstanceError("polynomial instances must lie in Z[x]")
    if not is_unit(ring_gcd(N, S, ring), ring):
        raise InvalidInstanceError("gcd(N, S) is not a unit")
    if not r or not is_unit(ring_gcd(S, r, ring), ring):
        raise InvalidInstanceError("gcd(S, r) is not a unit")

    r = _reduce_r(r, S, ring)
    rinv = mod_inverse(r, S, ring)
    r_prime = reduce_mod(N * rinv, S, ring)

    if ring.is_int:
        gate = abs(S) ** 3 > abs(N)
    elif ring.is_quad:
        gate = S.normsq() ** 3 > N.normsq()
    else:
        gate = 3 * S.degree >= N.degree

    leads: tuple[int, ...] | None = None
    if ring.is_poly:
        if lead_list is not None:
            leads = tuple(sorted(set(int(v) for v in lead_list)))
            if any(v == 0 for v in leads):
                raise InvalidInstanceError("lead_list entries must be nonzero")
        else:
            l_n, l_s = N.lead, S.lead
            if l_n % (l_s * l_s):
                leads = ()
            else:
                leads = _signed_divisors(l_n // (l_s * l_s))

    return ProblemInstance(ring, N, S, r, r_prime, leads, gate)


def build_chain(inst: ProblemInstance) -> RemChain:
    """Run the chain to the first zero a_t."""
    ring = inst.ring
    S, r, rp, N = inst.S, inst.r, inst.rPrime, inst.N
    rinv = mod_inverse(r, S, ring)
    w = exact_div(N - r * rp, S, ring)
    if w is None:
        raise AssertionError("(N - r*rPrime)/S must divide exactly")

    a = [S, reduce_mod(rp * rinv, S, ring)]
    b = [ring_zero(ring), ring_one(ring)]
    c = [ring_zero(ring), reduce_mod(w * rinv, S, ring)]
    quotients = []
    while a[-1]:
        q, rem = ring_div(a[-2], a[-1], ring)
        quotients.append(q)
        a.append(rem)
        b.append(b[-2] - q * b[-1])
        c.append(reduce_mod(c[-2] - q * c[-1], S, ring))
    return RemChain(tuple(a), tuple(b), tuple(c), tuple(quotients), len(a) - 1)


def congruence_witness(chain: RemChain, x, y, inst: ProblemInstance) -> bool:
    """True iff a_k*x + b_k*y = c_k (mod S) at every index of the chain."""
    ring = inst.ring
    for ak, bk, ck in zip(chain.a, chain.b, chain.c):
        if reduce_mod(ak * x + bk * y - ck, inst.S, ring):
            return False
    return True


def chain_dump(chain: RemChain) -> str:
    """Diagnostic text dump, one triple per line (golden-file friendly)."""
    lines = [f"t {chain.t}"]
    for k, (ak, bk, ck) in enumerate(chain.triples):
        lines.append(f"{k}: {ak} | {bk} | {ck}")
    return "\n".join(lines) + "\n"
