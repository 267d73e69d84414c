"""Exact scalars and sparse linear algebra over Q and Q(t)."""

from fractions import Fraction as Rational

from walg.coeffs.linalg import BACKEND, inverse, nullity, nullspace, rank, rank_by_specialization, rref, solve
from walg.coeffs.matrix import SparseMatrix, vstack
from walg.coeffs.ratfunc import RatFunc, exact_str, is_field_elem

__all__ = [
    "BACKEND",
    "RatFunc",
    "Rational",
    "SparseMatrix",
    "exact_str",
    "inverse",
    "is_field_elem",
    "nullity",
    "nullspace",
    "rank",
    "rank_by_specialization",
    "rref",
    "solve",
    "vstack",
]
