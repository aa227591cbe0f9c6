"""Exact arithmetic and linear algebra."""

from .lattice import (
    IntegerLattice,
    hnf,
    lattice_image,
    lattice_intersect,
    lattice_membership,
    lattice_preimage_condition,
    lattice_sum,
)
from .matrix import (
    Matrix,
    Subspace,
    contains,
    det,
    det_bareiss,
    det_cofactor,
    image,
    kernel,
    rank,
    solve,
    subspace_eq,
    subspace_intersect,
    subspace_sum,
)
from .scalars import (
    QQ,
    QQu,
    ZZu,
    Fp,
    LaurentPoly,
    PrimeField,
    RationalFunction,
    clearing_shift,
    field_from_spec,
    parse_rational,
    poly_divrem,
    poly_gcd,
    reduce_mod,
)

__all__ = [name for name in dir() if not name.startswith("_")]
