"""Finite quadratic sets and their Yang-Baxter algebras."""

from ._ybe import (
    Error,
    QuadraticSet,
    affine_quandle,
    canonical_form,
    check_conditions,
    dihedral_quandle,
    enumerate,
    extend,
    graded_dims,
    groebner,
    is_indecomposable,
    is_pbw,
    isomorphic,
    order_of_r,
    r_orbit_lengths,
)

__all__ = [
    "Error",
    "QuadraticSet",
    "affine_quandle",
    "canonical_form",
    "check_conditions",
    "dihedral_quandle",
    "enumerate",
    "extend",
    "graded_dims",
    "groebner",
    "is_indecomposable",
    "is_pbw",
    "isomorphic",
    "order_of_r",
    "r_orbit_lengths",
]
