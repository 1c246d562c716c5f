"""Shared plumbing for the ring modules: result records, the zero-polynomial
degree sentinel, error types, and the elementary-operation counter.

Everything here is intentionally tiny and dependency-free so that both the
quadratic-ring and polynomial modules can import it without cycles.
"""

from __future__ import annotations

from typing import Any, NamedTuple


class DivResult(NamedTuple):
    """Euclidean division result: ``a = q*b + r`` exactly.

    The remainder additionally satisfies the ring's size bound (a squared-norm
    contraction for the quadratic rings and centered integers, a strict degree
    drop for polynomials); the division routines check that bound before
    returning.
    """

    q: Any
    r: Any


class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares strictly below every integer but supports no arithmetic, so a
    zero degree can never be silently folded into an index computation the way
    a ``-1`` would be.
    """

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, _MinusInfinity)

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return isinstance(other, _MinusInfinity)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _MinusInfinity)

    def __hash__(self) -> int:
        return hash("degree(-inf)")

    def __repr__(self) -> str:
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


class InvalidInstanceError(ValueError):
    """A problem instance violates a precondition (zero/unit moduli, or a
    gcd that is not a unit)."""


class ElementSyntaxError(ValueError):
    """An element string does not parse, or parses to coordinates outside the
    ring (e.g. a parity-invalid half-integer pair)."""


class OpCounter:
    """Global count of elementary ring operations.

    Incremented once per addition/subtraction/multiplication/division/square
    root performed by the element classes. The counter is a plain int bump —
    cheap enough to leave permanently enabled — and exists so the complexity
    scaling of the divisor search can be measured without wall-clock noise.
    Not thread-isolated; concurrent runs share one stream of ticks.
    """

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def tick(self, n: int = 1) -> None:
        self.ops += n

    def reset(self) -> int:
        """Zero the counter, returning the value it had."""
        old = self.ops
        self.ops = 0
        return old


RING_OPS = OpCounter()
