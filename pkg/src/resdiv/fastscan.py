"""Vectorized candidate filtering for the quadratic-ring sweep.

The reference sweep (solver.enumerate_residues + solve_system per gamma) is
exact but walks the whole candidate disk per row, which is millions of
lattice points at the full radius of the non-Gaussian rings.  This module
prunes the disk with numpy before anything exact runs.

Quadratic rows (a != 0 and b != 0).  Eliminating y from the row line and
the product equation leaves a quadratic in x whose discriminant, as a
function of the shift gamma = c + lam*S, is itself a quadratic in lam:

    D(lam) = E*lam^2 + F*lam + G
    E = S^6
    F = 2*S^3*(S^2*c + beta) + 4*S^4*a*r
    G = (S^2*c + beta)^2 + 4*S^3*a*r*c + 4*S^2*a*delta

with beta = S*r'*b - S*r*a and delta = b*(r*r' - N).  A ring solution x
forces z = 2*A2*x + A1 to satisfy z^2 = D, so D must be a square in the
residue ring O_K/p for every split prime p.  O_K/p is F_p x F_p there, and
squareness of D mod p depends only on lam mod p, so each prime yields a
p-by-p boolean table over lam classes; eight tables cut the pool by about
4^-8 and the survivors go to the exact solver, which verifies everything
anyway.  Nothing here is trusted for soundness, only for not discarding
true solutions: z in O_K implies its image mod p is a square, always.

Linear rows (exactly one of a, b zero).  The quotient gamma/k (k the
nonzero coefficient) must lie in the ring: gamma*conj(k) = c*conj(k) +
lam*S*conj(k) must have both half-coordinates divisible by normsq(k), with
a valid parity, and the resulting factor's norm must divide normsq(N).
All int64-vectorizable below conservative magnitude guards; past them we
fall back to an exact per-point loop over the pool.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from .rings import QuadInt, _parity_ok
from .remseq import ProblemInstance
from .solver import candidate_radius

_SPLIT_PRIME_COUNT = 8
_INT64_GUARD = 1 << 62


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _split_primes(d: int, count: int = _SPLIT_PRIME_COUNT) -> tuple[int, ...]:
    """The smallest primes p >= 13 with p coprime to 2d and d a square mod p
    (so the quotient ring splits as F_p x F_p)."""
    out = []
    p = 13
    while len(out) < count:
        if _is_prime(p) and (2 * d) % p and pow(d % p, (p - 1) // 2, p) == 1:
            out.append(p)
        p += 2
    return tuple(out)


class _Pool:
    """Per-(d, radius) candidate lattice and prime tables, built once.

    lu, lv hold the half-coordinates of every lam with
    lu^2 + |d|*lv^2 <= 4*(radius+2)^2 and a valid parity; that disk covers
    every lam with normsq(c + lam*S) < radius^2 * normsq(S) whenever c is
    reduced mod S.  sq[k] is the squareness table of O_K/p_k indexed by the
    half-coordinates mod p_k, and idx0 pre-flattens the pool's class index
    for the first prime (the only full-pool gather per row).
    """

    __slots__ = (
        "d", "rbound", "lu", "lv", "l2u", "l2v",
        "primes", "sqrt_d", "inv2", "sq", "idx0",
    )

    def __init__(self, d: int, rbound: int):
        self.d = d
        self.rbound = rbound
        box = 4 * (rbound + 2) * (rbound + 2)
        umax = isqrt(box)
        vmax = isqrt(box // -d)
        us = np.arange(-umax, umax + 1, dtype=np.int64)
        vs = np.arange(-vmax, vmax + 1, dtype=np.int64)
        uu = us[:, None]
        vv = vs[None, :]
        inside = uu * uu + (-d) * vv * vv <= box
        if d % 4 == 1:
            inside &= (uu - vv) % 2 == 0
        else:
            inside &= ((uu % 2) == 0) & ((vv % 2) == 0)
        lu = np.broadcast_to(uu, inside.shape)[inside]
        lv = np.broadcast_to(vv, inside.shape)[inside]
        norm4 = lu * lu + (-d) * lv * lv
        order = np.lexsort((lv, lu, norm4))
        self.lu = lu[order]
        self.lv = lv[order]
        self.l2u = (self.lu * self.lu + d * self.lv * self.lv) // 2
        self.l2v = self.lu * self.lv

        self.primes = _split_primes(d)
        self.sqrt_d = []
        self.inv2 = []
        self.sq = []
        for p in self.primes:
            s = next(z for z in range(1, p) if z * z % p == d % p)
            self.sqrt_d.append(s)
            self.inv2.append((p + 1) // 2)
            ar = np.arange(p, dtype=np.int64)
            qr = np.zeros(p, dtype=bool)
            qr[(ar * ar) % p] = True
            plus = ((ar[:, None] + ar[None, :] * s) * self.inv2[-1]) % p
            minus = ((ar[:, None] - ar[None, :] * s) * self.inv2[-1]) % p
            self.sq.append(qr[plus] & qr[minus])
        p0 = self.primes[0]
        self.idx0 = ((self.lu % p0) * p0 + (self.lv % p0)).astype(np.int32)


_POOLS: dict[tuple[int, int], _Pool] = {}


def get_pool(d: int, rbound: int | None = None) -> _Pool:
    if rbound is None:
        rbound = candidate_radius(d)
    key = (d, rbound)
    if key not in _POOLS:
        _POOLS[key] = _Pool(d, rbound)
    return _POOLS[key]


def _disc_table(E: QuadInt, F: QuadInt, G: QuadInt, pool: _Pool, k: int):
    """p x p boolean: is D(lam) a square in O_K/p, by lam class."""
    p = pool.primes[k]
    i2 = pool.inv2[k]
    dp = pool.d % p
    ar = np.arange(p, dtype=np.int64)
    la = ar[:, None]
    lb = ar[None, :]
    l2u = (((la * la + dp * lb * lb) % p) * i2) % p
    l2v = (la * lb) % p
    eu, ev = E.u % p, E.v % p
    fu, fv = F.u % p, F.v % p
    gu, gv = G.u % p, G.v % p
    du = (((eu * l2u + dp * ev * l2v) % p) * i2
          + ((fu * la + dp * fv * lb) % p) * i2 + gu) % p
    dv = (((eu * l2v + ev * l2u) % p) * i2
          + ((fu * lb + fv * la) % p) * i2 + gv) % p
    return pool.sq[k][du, dv]


def _quad_row(a, b, c, inst: ProblemInstance, pool: _Pool) -> list[QuadInt]:
    S, r, rp, N = inst.S, inst.r, inst.rPrime, inst.N
    s2 = S * S
    s3 = s2 * S
    beta = S * rp * b - S * r * a
    delta = b * (r * rp - N)
    core = s2 * c + beta
    ar_ = a * r
    E = s3 * s3
    F = 2 * (s3 * core) + 4 * (s3 * (S * ar_))
    G = core * core + 4 * (s3 * (ar_ * c)) + 4 * (s2 * (a * delta))

    surv = None
    for k, p in enumerate(pool.primes):
        table = _disc_table(E, F, G, pool, k)
        if surv is None:
            surv = np.nonzero(table.flat[pool.idx0])[0]
        else:
            cls = table[pool.lu[surv] % p, pool.lv[surv] % p]
            surv = surv[cls]
        if surv.size == 0:
            return []
    d = pool.d
    return [c + QuadInt(int(pool.lu[i]), int(pool.lv[i]), d) * S for i in surv]


def _linear_row(a, b, c, inst: ProblemInstance, pool: _Pool) -> list[QuadInt]:
    k_el = a if a else b
    quot_gives_x = bool(a)
    d = pool.d
    S = inst.S
    nk = k_el.normsq()
    kc = k_el.conj()
    K = c * kc
    msc = S * kc
    maxlam = 2 * (pool.rbound + 2)
    bound_w = max(abs(K.u), abs(K.v)) + maxlam * (abs(msc.u) + (-d) * abs(msc.v))

    if bound_w < _INT64_GUARD and nk < _INT64_GUARD:
        wu = K.u + (pool.lu * msc.u + d * pool.lv * msc.v) // 2
        wv = K.v + (pool.lu * msc.v + pool.lv * msc.u) // 2
        keep = (wu % nk == 0) & (wv % nk == 0)
        idx = np.nonzero(keep)[0]
        if idx.size:
            qu = wu[idx] // nk
            qv = wv[idx] // nk
            if d % 4 == 1:
                par = (qu - qv) % 2 == 0
            else:
                par = ((qu % 2) == 0) & ((qv % 2) == 0)
            idx, qu, qv = idx[par], qu[par], qv[par]
        if idx.size:
            # the factor this quotient induces must have norm dividing
            # normsq(N); vectorized when magnitudes stay inside int64
            base = inst.r if quot_gives_x else inst.rPrime
            n_n = inst.N.normsq()
            bq = bound_w // nk + 2
            be = max(abs(base.u), abs(base.v)) + bq * (abs(S.u) + (-d) * abs(S.v))
            if n_n < 2**63 and be * be * (1 - d) < _INT64_GUARD:
                eu = (S.u * qu + d * S.v * qv) // 2 + base.u
                ev = (S.u * qv + S.v * qu) // 2 + base.v
                ne = (eu * eu - d * ev * ev) // 4
                ok = (ne != 0) & (n_n % np.maximum(ne, 1) == 0)
                idx = idx[ok]
        picked = idx.tolist()
    else:
        picked = []
        for i in range(pool.lu.size):
            w = K + QuadInt(int(pool.lu[i]), int(pool.lv[i]), d) * msc
            if w.u % nk == 0 and w.v % nk == 0 and _parity_ok(w.u // nk, w.v // nk, d):
                picked.append(i)
    return [c + QuadInt(int(pool.lu[i]), int(pool.lv[i]), d) * S for i in picked]


def fast_row_candidates(a, b, c, inst: ProblemInstance, pool: _Pool) -> list[QuadInt]:
    """Filtered gamma candidates for one chain row; superset-safe.

    Everything returned still goes through the exact solver, so the only
    contract that matters is never dropping a gamma that carries a true
    solution inside the pool radius.
    """
    if a and b:
        return _quad_row(a, b, c, inst, pool)
    if a or b:
        return _linear_row(a, b, c, inst, pool)
    return []
