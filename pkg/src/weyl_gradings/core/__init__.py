"""Core functionality for the weyl-gradings workbench."""

from .base import Artifact, canonical_json
from .linalg import EchelonBasis, SparseVec, express, invert_columns, rank
from .parallel import parallel_map
from .scalars import (
    DEFAULT_CONDUCTOR,
    CycScalar,
    as_scalar,
    cyclotomic_polynomial,
    imaginary_unit,
    omega,
    root_of_unity,
    sqrt2,
)

__all__ = [
    "Artifact",
    "CycScalar",
    "DEFAULT_CONDUCTOR",
    "EchelonBasis",
    "SparseVec",
    "as_scalar",
    "canonical_json",
    "cyclotomic_polynomial",
    "express",
    "imaginary_unit",
    "invert_columns",
    "omega",
    "parallel_map",
    "rank",
    "root_of_unity",
    "sqrt2",
]
