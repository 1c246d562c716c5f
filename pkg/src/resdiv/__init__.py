"""Divisors in residue classes: find all d | N with d = r (mod S).

Supported rings: Z, the imaginary quadratic Euclidean rings O_K for
d in {-1, -2, -3, -7, -11}, and Z[x].  The run time is polynomial in the
size of N whenever |S|^3 > |N| (3*deg S >= deg N for polynomials).
"""

from .algorithms import (
    DivisorReport,
    divisors_poly,
    divisors_quadratic,
    divisors_rational,
    find_divisors,
)
from .base import (
    DivResult,
    ElementSyntaxError,
    InvalidInstanceError,
    MINUS_INFINITY,
    RING_OPS,
)
from .bench import BenchRow, format_csv, format_dat, run_bench, sample_instance
from .families import (
    FamilyInstance,
    FamilyReport,
    SearchOutcome,
    cohen_instance,
    search_records,
    seven_signed_instance,
    standalone_instance,
    verify_family,
)
from .oracle import (
    OracleResult,
    gaussian_prime_above,
    oracle_poly,
    oracle_quadratic,
    oracle_quadratic_factored,
    oracle_rational,
)
from .polynomials import Poly, poly_div, poly_sqrt
from .remseq import ProblemInstance, RemChain, build_chain, build_instance, chain_dump
from .rings import (
    QuadInt,
    RingId,
    RING_Z,
    RING_ZI,
    RING_ZX,
    floor_sqrt,
    int_sqrt,
    mod_inverse,
    quad_div,
    quad_ring,
    quad_sqrt,
    ring_from_name,
    ring_gcd,
    units,
)
from .solver import SolutionPair, enumerate_residues, solve_system
from .syntax import format_element, parse_element

__all__ = [
    "BenchRow",
    "DivResult",
    "DivisorReport",
    "ElementSyntaxError",
    "FamilyInstance",
    "FamilyReport",
    "InvalidInstanceError",
    "MINUS_INFINITY",
    "OracleResult",
    "Poly",
    "ProblemInstance",
    "QuadInt",
    "RemChain",
    "RING_OPS",
    "RING_Z",
    "RING_ZI",
    "RING_ZX",
    "RingId",
    "SearchOutcome",
    "SolutionPair",
    "build_chain",
    "build_instance",
    "chain_dump",
    "cohen_instance",
    "divisors_poly",
    "divisors_quadratic",
    "divisors_rational",
    "enumerate_residues",
    "find_divisors",
    "floor_sqrt",
    "format_csv",
    "format_dat",
    "format_element",
    "gaussian_prime_above",
    "int_sqrt",
    "mod_inverse",
    "oracle_poly",
    "oracle_quadratic",
    "oracle_quadratic_factored",
    "oracle_rational",
    "parse_element",
    "poly_div",
    "poly_sqrt",
    "quad_div",
    "quad_ring",
    "quad_sqrt",
    "ring_from_name",
    "ring_gcd",
    "run_bench",
    "sample_instance",
    "search_records",
    "seven_signed_instance",
    "solve_system",
    "standalone_instance",
    "units",
    "verify_family",
]

__version__ = "0.1.0"
