"""Exact finite-field arithmetic: F_p, F_p[a]/(f), polynomials, linear algebra."""

from .fields import ExtensionField, Field, FieldElement, PrimeField
from .linalg import FieldMatrix, determinant, rank, solve
from .poly import find_irreducible, is_irreducible
from .primes import is_prime, next_prime

__all__ = [
    "ExtensionField",
    "Field",
    "FieldElement",
    "FieldMatrix",
    "PrimeField",
    "determinant",
    "find_irreducible",
    "is_irreducible",
    "is_prime",
    "next_prime",
    "rank",
    "solve",
]
