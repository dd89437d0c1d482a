"""
Structure-constant algebras: octonions, the Okubo algebra, the Albert algebra
and Pauli-graded matrix algebras.
"""

from .albert import (
    NuBasis,
    albert_algebra,
    albert_nu_basis,
    iota,
    nu_block_failures,
    okubo_norm_identity,
)
from .base import (
    AlgebraMap,
    AlgebraOptions,
    AlgElement,
    CubicFit,
    DegenerateFlag,
    StructAlgebra,
    algebra_from_table,
    cubic_fit,
    jordan_power,
)
from .cayley import (
    cayley_cd_basis,
    cayley_cd_correspondence,
    cayley_good_basis,
    cd_double,
    conjugate,
    derive_okubo_degrees,
    okubo_algebra,
)
from .pauli import matrix_algebra_MDk, pauli_matrix_algebra

__all__ = [
    "AlgElement",
    "AlgebraMap",
    "AlgebraOptions",
    "CubicFit",
    "DegenerateFlag",
    "NuBasis",
    "StructAlgebra",
    "albert_algebra",
    "albert_nu_basis",
    "algebra_from_table",
    "cayley_cd_basis",
    "cayley_cd_correspondence",
    "cayley_good_basis",
    "cd_double",
    "conjugate",
    "cubic_fit",
    "derive_okubo_degrees",
    "iota",
    "jordan_power",
    "matrix_algebra_MDk",
    "nu_block_failures",
    "okubo_algebra",
    "okubo_norm_identity",
    "pauli_matrix_algebra",
]
