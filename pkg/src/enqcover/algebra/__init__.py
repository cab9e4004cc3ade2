"""Exact scalar domains, sparse polynomials and small matrices."""

from .domains import GF, QQ, QZ5, Domain, DomainError, PrimeField, Zeta5, domain_from_descriptor, zeta_power
from .matrix import (
    MatrixError,
    PolyMatrix,
    determinant,
    mat_coerce,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_scale,
    mat_transpose,
    pfaffian4,
    rank,
    row_reduce,
    scalar_det,
    solve,
)
from .poly import Poly, PolyError, PolyRing, join_rings, ring

__all__ = [
    "GF",
    "join_rings",
    "QQ",
    "QZ5",
    "Domain",
    "DomainError",
    "MatrixError",
    "Poly",
    "PolyError",
    "PolyMatrix",
    "PolyRing",
    "PrimeField",
    "Zeta5",
    "determinant",
    "mat_coerce",
    "mat_identity",
    "mat_inv",
    "mat_mul",
    "mat_scale",
    "mat_transpose",
    "domain_from_descriptor",
    "pfaffian4",
    "rank",
    "ring",
    "row_reduce",
    "scalar_det",
    "solve",
    "zeta_power",
]
