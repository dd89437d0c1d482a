"""
Weyl groups of gradings: closures, upper bounds, root systems and the verification pipeline.
"""

from .bounds import pair_signatures, structured_z25_count, support_preserving_upper_bound
from .perm import PermGroup, closure, elementary_transvections, perm_from_degree_map
from .pipeline import (
    CheckResult,
    Mode,
    WeylReport,
    parse_mode,
    weyl_group,
    weyl_matrix_theorem_check,
)
from .roots import RootSystem, phi_root_system, symmetric_subsets

__all__ = [
    "CheckResult",
    "Mode",
    "PermGroup",
    "RootSystem",
    "WeylReport",
    "closure",
    "elementary_transvections",
    "pair_signatures",
    "parse_mode",
    "perm_from_degree_map",
    "phi_root_system",
    "structured_z25_count",
    "support_preserving_upper_bound",
    "symmetric_subsets",
    "weyl_group",
    "weyl_matrix_theorem_check",
]
