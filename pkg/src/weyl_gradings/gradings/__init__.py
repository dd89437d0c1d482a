"""
Gradings, supports, universal groups and the builtin fine gradings.
"""

from .base import (
    Grading,
    SupportEntry,
    SupportTable,
    UniversalData,
    grading_make,
    induce,
    support,
    universal_abelian_group,
)
from .builtin import GRADING_NAMES, builtin_grading, declared_universal, z33_basis

__all__ = [
    "GRADING_NAMES",
    "Grading",
    "SupportEntry",
    "SupportTable",
    "UniversalData",
    "builtin_grading",
    "declared_universal",
    "grading_make",
    "induce",
    "support",
    "universal_abelian_group",
    "z33_basis",
]
