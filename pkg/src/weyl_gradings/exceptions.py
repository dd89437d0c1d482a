"""
Custom exceptions for the weyl-gradings workbench.

This module defines the hierarchy of exceptions raised throughout the package.
Outcomes that are expected results of a computation (a failed extension, a
non-realizable group automorphism, a degenerate cubic fit) are returned as
values instead and live next to the operations that produce them.
"""

from typing import Any, Optional, Tuple


class WeylGradingsError(Exception):
    """Base exception for all weyl-gradings errors."""

    pass


class ConfigurationError(WeylGradingsError):
    """Raised when configuration is invalid or a configured choice cannot be honoured."""

    pass


class ScalarError(WeylGradingsError):
    """Raised on invalid cyclotomic arithmetic (inverting zero, malformed scalar strings)."""

    pass


class GroupError(WeylGradingsError):
    """Raised when abelian group data or a homomorphism is ill-defined."""

    pass


class DegenerateBicharacterError(GroupError):
    """Raised when a bicharacter expected to be nondegenerate has a nontrivial radical."""

    def __init__(self, message: str, radical: Any = None) -> None:
        """
        Initialize DegenerateBicharacterError.

        Args:
            message: Error message
            radical: A nonzero element pairing trivially with the whole group
        """
        super().__init__(message)
        self.radical = radical


class SymplecticFormError(GroupError):
    """Raised when a group is not a q-group presented in symplectic form."""

    pass


class BoundExceededError(WeylGradingsError):
    """Raised when an enumeration exceeds its configured bound."""

    def __init__(
        self,
        message: str,
        bound_name: str = "",
        bound: int = 0,
        partial_count: Optional[int] = None,
    ) -> None:
        """
        Initialize BoundExceededError.

        Args:
            message: Error message
            bound_name: Settings key of the bound that was hit
            bound: The bound value
            partial_count: Number of objects produced before giving up (if known)
        """
        super().__init__(message)
        self.bound_name = bound_name
        self.bound = bound
        self.partial_count = partial_count


class AlgebraConstructionError(WeylGradingsError):
    """Raised when an algebra fails one of its declared structural checks."""

    pass


class MissingStructureError(WeylGradingsError):
    """Raised when an operation needs a unit or norm the algebra does not carry."""

    pass


class HomogeneityError(WeylGradingsError):
    """Raised when a degree assignment is not a grading."""

    def __init__(self, message: str, triple: Optional[Tuple[str, str, str]] = None) -> None:
        """
        Initialize HomogeneityError.

        Args:
            message: Error message
            triple: Labels (b_i, b_j, b_k) with b_k in b_i*b_j of the wrong degree
        """
        super().__init__(message)
        self.triple = triple


class NotGradedError(WeylGradingsError):
    """Raised when an automorphism does not permute the components of a grading."""

    pass


class CertificationError(WeylGradingsError):
    """Raised when a linear map is not an invertible multiplicative map."""

    def __init__(self, message: str, witness: Optional[Tuple[str, str]] = None) -> None:
        """
        Initialize CertificationError.

        Args:
            message: Error message
            witness: Basis label pair on which multiplicativity fails (if any)
        """
        super().__init__(message)
        self.witness = witness


class SpinConventionError(CertificationError):
    """Raised when a spin-induced map certifies under neither reflection order."""

    pass


class UnknownObjectError(WeylGradingsError):
    """Raised for unknown builtin names or missing workspace entries."""

    pass


class SerializationError(WeylGradingsError):
    """Raised when a JSON artifact cannot be decoded."""

    pass
