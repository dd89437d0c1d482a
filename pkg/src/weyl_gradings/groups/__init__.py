"""
Finitely generated abelian groups, Smith normal form and bicharacters.
"""

from .abelian import AbElem, AbGroup, AbHom, enumerate_automorphisms, quotient_presentation
from .bicharacters import (
    Bicharacter,
    CriterionResult,
    aut_bicharacter_bruteforce,
    aut_bicharacter_matrix_criterion,
    standard_bicharacter,
    symplectic_basis,
)
from .smith import invariant_factors, smith_normal_form, solve_in_quotient

__all__ = [
    "AbElem",
    "AbGroup",
    "AbHom",
    "Bicharacter",
    "CriterionResult",
    "aut_bicharacter_bruteforce",
    "aut_bicharacter_matrix_criterion",
    "enumerate_automorphisms",
    "invariant_factors",
    "quotient_presentation",
    "smith_normal_form",
    "solve_in_quotient",
    "standard_bicharacter",
    "symplectic_basis",
]
