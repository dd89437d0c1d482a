"""
weyl-gradings - exact workbench for fine gradings and their Weyl groups.

This library builds the fine gradings of matrix algebras, the octonions and the
Albert algebra over cyclotomic fields, and computes their Weyl groups by
matching a closure of explicit automorphisms against an exhaustive
support-preserving search on the universal grading group.
"""

from .algebras import (
    AlgElement,
    StructAlgebra,
    albert_algebra,
    cayley_good_basis,
    matrix_algebra_MDk,
    okubo_algebra,
    pauli_matrix_algebra,
)
from .config import ConfigManager, WorkbenchSettings, configure, get_settings
from .core import CycScalar, root_of_unity
from .exceptions import (
    AlgebraConstructionError,
    BoundExceededError,
    CertificationError,
    ConfigurationError,
    GroupError,
    HomogeneityError,
    NotGradedError,
    SerializationError,
    UnknownObjectError,
    WeylGradingsError,
)
from .gradings import Grading, builtin_grading, universal_abelian_group
from .groups import AbGroup, AbHom, standard_bicharacter
from .morphisms import AlgAutomorphism, SupportPerm, builtin_automorphism
from .weyl import PermGroup, WeylReport, weyl_group, weyl_matrix_theorem_check
from .workspace import Workspace, builtin_algebra

__version__ = "0.1.0"

__all__ = [
    # Scalars and groups
    "CycScalar",
    "root_of_unity",
    "AbGroup",
    "AbHom",
    "standard_bicharacter",
    # Algebras
    "AlgElement",
    "StructAlgebra",
    "albert_algebra",
    "builtin_algebra",
    "cayley_good_basis",
    "matrix_algebra_MDk",
    "okubo_algebra",
    "pauli_matrix_algebra",
    # Gradings and automorphisms
    "Grading",
    "builtin_grading",
    "universal_abelian_group",
    "AlgAutomorphism",
    "SupportPerm",
    "builtin_automorphism",
    # Weyl groups
    "PermGroup",
    "WeylReport",
    "weyl_group",
    "weyl_matrix_theorem_check",
    # Workspace and configuration
    "Workspace",
    "ConfigManager",
    "WorkbenchSettings",
    "configure",
    "get_settings",
    # Exceptions
    "WeylGradingsError",
    "AlgebraConstructionError",
    "BoundExceededError",
    "CertificationError",
    "ConfigurationError",
    "GroupError",
    "HomogeneityError",
    "NotGradedError",
    "SerializationError",
    "UnknownObjectError",
]
