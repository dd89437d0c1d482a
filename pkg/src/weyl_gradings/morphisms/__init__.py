"""
Certified automorphisms, their support permutations and the named generator families.
"""

from .base import (
    AlgAutomorphism,
    StabDiag,
    SupportPerm,
    automorphism_check,
    graded_automorphism_check,
    stab_diag_membership,
)
from .builtin import (
    AUTOMORPHISM_NAMES,
    Incomparable,
    NotRealizable,
    associativity_defect,
    builtin_automorphism,
    octonion_aut_from_group_aut,
    realize_z33,
    z33_isomorphism_obstruction,
)
from .extension import NoExtension, extend_from_generators
from .matrix import ad_homogeneous, division_aut_from_symplectic, monomial_automorphism
from .spin import (
    reflection,
    spin_automorphism,
    spin_beta_z25,
    spin_beta_zz23,
    spin_standard,
    zz23_spin_triple,
)

__all__ = [
    "AUTOMORPHISM_NAMES",
    "AlgAutomorphism",
    "Incomparable",
    "NoExtension",
    "NotRealizable",
    "StabDiag",
    "SupportPerm",
    "ad_homogeneous",
    "associativity_defect",
    "automorphism_check",
    "builtin_automorphism",
    "division_aut_from_symplectic",
    "extend_from_generators",
    "graded_automorphism_check",
    "monomial_automorphism",
    "octonion_aut_from_group_aut",
    "realize_z33",
    "reflection",
    "spin_automorphism",
    "spin_beta_z25",
    "spin_beta_zz23",
    "spin_standard",
    "stab_diag_membership",
    "z33_isomorphism_obstruction",
    "zz23_spin_triple",
]
