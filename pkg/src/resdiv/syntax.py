"""Text syntax for ring elements.

Integers: decimal with optional sign ("-42").
Quadratic integers: "a", "a+b*w", "a/2+b/2*w", where w stands for sqrt(d) of
the ambient ring and the only permitted denominator is 2 (half-integer
coordinates exist only for d = -3, -7, -11 and must come in matching-parity
pairs; anything else is rejected).
Polynomials: "c0 + c1*x + ... + ck*x^k", ascending powers, integer or
rational coefficients ("1/2 + 3/2*x"), "x" and "-x^2" allowed for unit
coefficients.

format_element is str() on the element types, which emit exactly this
grammar, so format -> parse is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .base import ElementSyntaxError
from .polynomials import Poly
from .rings import Element, QuadInt, RingId

_INT_RE = re.compile(r"^[+-]?\d+$")
_TERM_SPLIT_RE = re.compile(r"[+-]?[^+-]+")
_QUAD_RAT_RE = re.compile(r"^([+-]?)(\d+)(/2)?$")
_QUAD_W_RE = re.compile(r"^([+-]?)(?:(\d+)(/2)?\*)?w$")
_POLY_TERM_RE = re.compile(
    r"^([+-]?)(?:(\d+(?:/\d+)?)(?:\*x(?:\^(\d+))?)?|x(?:\^(\d+))?)$"
)


def _split_terms(text: str) -> list[str]:
    compact = text.replace(" ", "").replace("\t", "")
    if not compact:
        raise ElementSyntaxError("empty element")
    terms = _TERM_SPLIT_RE.findall(compact)
    if "".join(terms) != compact:
        raise ElementSyntaxError(f"cannot parse {text!r}")
    return terms


def _parse_int(text: str) -> int:
    if not _INT_RE.match(text.strip()):
        raise ElementSyntaxError(f"not a decimal integer: {text!r}")
    return int(text)


def _parse_quad(text: str, d: int) -> QuadInt:
    u = v = 0
    seen_rat = seen_w = False
    for term in _split_terms(text):
        m = _QUAD_W_RE.match(term)
        if m:
            if seen_w:
                raise ElementSyntaxError(f"two w-terms in {text!r}")
            seen_w = True
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            v = sign * (mag if m.group(3) else 2 * mag)
            continue
        m = _QUAD_RAT_RE.match(term)
        if m:
            if seen_rat:
                raise ElementSyntaxError(f"two rational terms in {text!r}")
            seen_rat = True
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2))
            u = sign * (mag if m.group(3) else 2 * mag)
            continue
        raise ElementSyntaxError(f"bad term {term!r} in {text!r}")
    try:
        return QuadInt(u, v, d)
    except ValueError as exc:
        raise ElementSyntaxError(str(exc)) from None


def _parse_coeff(text: str) -> int | Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) == 0:
            raise ElementSyntaxError(f"zero denominator in {text!r}")
        f = Fraction(int(num), int(den))
        return int(f) if f.denominator == 1 else f
    return int(text)


def _parse_poly(text: str) -> Poly:
    coeffs: dict[int, int | Fraction] = {}
    for term in _split_terms(text):
        m = _POLY_TERM_RE.match(term)
        if not m:
            raise ElementSyntaxError(f"bad term {term!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            coeff = _parse_coeff(m.group(2))
            # exponent group 3 is present only when "*x" followed the number
            if "*x" in term:
                k = int(m.group(3)) if m.group(3) else 1
            else:
                k = 0
        else:
            coeff = 1
            k = int(m.group(4)) if m.group(4) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * coeff
    if not coeffs:
        return Poly.zero()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out)


def parse_element(text: str, ring: RingId) -> Element:
    """Parse an element in the ring's text syntax.

    Raises ElementSyntaxError on malformed input, including half-integer
    quadratic forms whose parities do not make a ring element.
    """
    if ring.is_int:
        return _parse_int(text)
    if ring.is_quad:
        return _parse_quad(text, ring.d)
    return _parse_poly(text)


def format_element(x: Element) -> str:
    """Canonical text for an element; parse_element inverts this exactly."""
    return str(x)
