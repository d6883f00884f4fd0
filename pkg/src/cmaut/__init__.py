"""Exact computations in Calogero-Moser matrix-pair varieties and the
amalgam of symplectic automorphisms acting on them."""

from .linalg import (
    Matrix,
    Polynomial,
    invertible_in_span,
    kernel_basis,
    poly_eval_matrix,
    rank,
)
from .cmspace import (
    CMPoint,
    ConjugacyWitness,
    base_point,
    is_cm_point,
    orbit_tangent_dimension,
    pgl_equivalent,
)
from .autgroup import (
    AffineGen,
    NormalForm,
    TriangularGen,
    UGen,
    Word,
    act,
    compose_in_factor,
    in_U,
    invert_letter,
    is_identity,
    normal_form,
    phi,
    psi,
    stabilizes_basepoint,
)

__all__ = [
    "AffineGen", "CMPoint", "ConjugacyWitness", "Matrix", "NormalForm",
    "Polynomial", "TriangularGen", "UGen", "Word",
    "act", "base_point", "compose_in_factor", "in_U", "invert_letter",
    "invertible_in_span", "is_cm_point", "is_identity", "kernel_basis",
    "normal_form", "orbit_tangent_dimension", "pgl_equivalent", "phi",
    "poly_eval_matrix", "psi", "rank", "stabilizes_basepoint",
]
