"""
Certified automorphisms and the support permutations they induce.
"""

import logging
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..algebras.base import AlgebraMap, AlgElement, StructAlgebra
from ..core.base import Artifact
from ..core.linalg import SparseVec
from ..core.scalars import CycScalar
from ..exceptions import CertificationError, GroupError, NotGradedError, SerializationError
from ..gradings.base import Grading
from ..groups.abelian import AbHom

logger = logging.getLogger(__name__)


class AlgAutomorphism(AlgebraMap, Artifact):
    """
    Linear automorphism of an algebra, given by the images of the basis vectors.

    Attributes:
        algebra: The algebra acted on
        columns: Image of each basis vector
        name: Display name
        certified: True once multiplicativity and invertibility were checked
    """

    kind = "automorphism"

    def __init__(
        self,
        algebra: StructAlgebra,
        columns: Sequence[SparseVec],
        name: str = "automorphism",
        certified: bool = False,
    ) -> None:
        super().__init__(algebra, algebra, columns)
        self.algebra = algebra
        self.name = name
        self.certified = certified

    def compose(self, other: AlgebraMap) -> "AlgAutomorphism":  # type: ignore[override]
        """self after other."""
        if not isinstance(other, AlgAutomorphism) or other.algebra is not self.algebra:
            raise CertificationError("Cannot compose automorphisms of different algebras")
        return AlgAutomorphism(
            self.algebra,
            [self.apply_vec(c) for c in other.columns],
            name=f"{self.name}*{other.name}",
            certified=self.certified and other.certified,
        )

    def inverse(self) -> "AlgAutomorphism":
        return AlgAutomorphism(
            self.algebra, self.inverse_columns(), name=f"{self.name}^-1", certified=self.certified
        )

    def power(self, n: int) -> "AlgAutomorphism":
        if n < 0:
            return self.inverse().power(-n)
        one = CycScalar.one(self.algebra.conductor)
        result = AlgAutomorphism(
            self.algebra, [{j: one} for j in range(self.algebra.dim)], "id", self.certified
        )
        for _ in range(n):
            result = self.compose(result)
        result.name = f"{self.name}^{n}"
        return result

    def order(self, max_order: int = 1000) -> int:
        """
        Multiplicative order.

        Raises:
            CertificationError: If no power up to max_order is the identity
        """
        current: AlgAutomorphism = self
        for n in range(1, max_order + 1):
            if current.is_identity():
                return n
            current = self.compose(current)
        raise CertificationError(f"{self.name} has order above {max_order}")

    def transport(self, target: StructAlgebra) -> "AlgAutomorphism":
        """
        The same automorphism on an algebra obtained from this one by ``rebase``.

        Raises:
            CertificationError: If ``target`` was not rebased from this algebra
        """
        if target.parent is not self.algebra:
            raise CertificationError(f"{target.name} was not rebased from {self.algebra.name}")
        columns = []
        for j in range(target.dim):
            parent_vec = target.coordinates_in_parent({j: CycScalar.one(target.conductor)})
            columns.append(target.coordinates_from_parent(self.apply_vec(parent_vec)))
        return AlgAutomorphism(target, columns, name=self.name, certified=False)

    def __call__(self, x: AlgElement) -> AlgElement:
        return AlgElement(self.algebra, self.apply_vec(x.vec))

    # ── Serialization ────────────────────────────────────────────────

    def to_dict(self) -> Dict[str, Any]:
        zero = CycScalar.zero(self.algebra.conductor)
        rows = [
            [self.columns[j].get(i, zero).to_string() for j in range(self.algebra.dim)]
            for i in range(self.algebra.dim)
        ]
        return {
            "kind": self.kind,
            "name": self.name,
            "algebra": self.algebra.name,
            "certified": self.certified,
            "matrix": rows,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **context: Any) -> "AlgAutomorphism":
        """
        Args:
            data: Output of ``to_dict``
            algebra: The StructAlgebra named by ``data["algebra"]`` (required context)
        """
        if data.get("kind", "automorphism") != "automorphism":
            raise SerializationError(f"Expected an automorphism, got {data.get('kind')}")
        algebra = context.get("algebra")
        if algebra is None or algebra.name != data["algebra"]:
            raise SerializationError(
                f"Automorphism {data.get('name')} needs algebra {data.get('algebra')}"
            )
        n = algebra.dim
        rows = data["matrix"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise SerializationError(f"Automorphism matrix must be {n} x {n}")
        columns: List[SparseVec] = [{} for _ in range(n)]
        for i, row in enumerate(rows):
            for j, text in enumerate(row):
                value = CycScalar.from_string(text)
                if not value.is_zero:
                    columns[j][i] = value
        return cls(algebra, columns, name=data["name"], certified=bool(data.get("certified")))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgAutomorphism):
            return NotImplemented
        return self.algebra.name == other.algebra.name and self.columns == other.columns

    def __hash__(self) -> int:
        return hash((self.algebra.name, self.name))

    def __repr__(self) -> str:
        return f"AlgAutomorphism({self.name} on {self.algebra.name}, certified={self.certified})"


def automorphism_check(
    algebra: StructAlgebra, columns: Sequence[SparseVec], name: str = "automorphism"
) -> AlgAutomorphism:
    """
    Certify a linear map as an automorphism.

    Args:
        algebra: The algebra
        columns: Image of each basis vector
        name: Name of the result

    Returns:
        Certified AlgAutomorphism

    Raises:
        CertificationError: If the map is singular, fails multiplicativity on a
            basis pair (reported as the witness) or moves the unit
    """
    phi = AlgAutomorphism(algebra, columns, name=name)
    if not phi.is_invertible():
        raise CertificationError(f"{name} is not invertible on {algebra.name}")
    witness = phi.multiplicativity_witness()
    if witness is not None:
        raise CertificationError(f"{name} is not multiplicative at {witness}", witness)
    if algebra.unit is not None and phi.apply_vec(algebra.unit) != algebra.unit:
        raise CertificationError(f"{name} does not fix the unit of {algebra.name}")
    phi.certified = True
    logger.debug(f"Certified {name} on {algebra.name}")
    return phi


# ── Support permutations ─────────────────────────────────────────────


class SupportPerm:
    """
    Permutation of the support of a grading induced by a graded automorphism.

    Attributes:
        grading: The grading
        perm: perm[s] is the support position that component s is sent to
    """

    __slots__ = ("grading", "perm")

    def __init__(self, grading: Grading, perm: Sequence[int]) -> None:
        self.grading = grading
        self.perm: Tuple[int, ...] = tuple(perm)
        table = grading.support()
        if sorted(self.perm) != list(range(len(table))):
            raise GroupError(f"{self.perm} is not a permutation of the support")
        dims = table.dims
        for s, t in enumerate(self.perm):
            if dims[s] != dims[t]:
                raise GroupError(
                    f"Support map sends a {dims[s]}-dimensional component "
                    f"to a {dims[t]}-dimensional one"
                )

    @classmethod
    def identity(cls, grading: Grading) -> "SupportPerm":
        return cls(grading, range(len(grading.support())))

    def __call__(self, s: int) -> int:
        return self.perm[s]

    def compose(self, other: "SupportPerm") -> "SupportPerm":
        """self after other."""
        return SupportPerm(self.grading, [self.perm[t] for t in other.perm])

    def inverse(self) -> "SupportPerm":
        inv = [0] * len(self.perm)
        for s, t in enumerate(self.perm):
            inv[t] = s
        return SupportPerm(self.grading, inv)

    def is_identity(self) -> bool:
        return all(s == t for s, t in enumerate(self.perm))

    def induced_universal(self) -> AbHom:
        """
        The automorphism of U(Gamma) restricting to this permutation on the support.

        Raises:
            GroupError: If no such automorphism exists
        """
        data = self.grading.universal()
        U = data.group
        images_of_basis = [
            np.array(data.embedding[self.perm[b]], dtype=np.int64) for b in data.basis
        ]
        columns = []
        for word in data.generator_words:
            total = np.zeros(U.rank, dtype=np.int64)
            for c, img in zip(word, images_of_basis):
                total += c * img
            columns.append(U.normalize([int(x) for x in total]))
        mu = AbHom.from_images(U, U, columns)
        for s, t in enumerate(self.perm):
            if mu.apply(data.embedding[s]) != data.embedding[t]:
                raise GroupError(f"Support permutation does not extend to U at entry {s}")
        return mu

    def degree_map(self) -> Dict[Tuple[int, ...], Tuple[int, ...]]:
        """Support degrees (in the grading group) -> image degrees."""
        degrees = self.grading.support().degrees
        return {degrees[s]: degrees[t] for s, t in enumerate(self.perm)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupportPerm):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"SupportPerm({list(self.perm)})"


def graded_automorphism_check(grading: Grading, phi: AlgAutomorphism) -> SupportPerm:
    """
    The permutation of the support induced by an automorphism of the grading.

    Every basis vector of a component must be sent into one and the same
    component; since the basis is adapted this is the subspace equality
    phi(A_s) = A_{pi(s)}.

    Raises:
        NotGradedError: If some component is spread over several components
        CertificationError: If phi is not certified
    """
    if not phi.certified:
        raise CertificationError(f"{phi.name} is not certified")
    if phi.algebra is not grading.algebra:
        raise NotGradedError(
            f"{phi.name} acts on {phi.algebra.name}, not on {grading.algebra.name}"
        )
    table = grading.support()
    positions = grading.component_positions()
    perm = []
    for s, entry in enumerate(table):
        targets = {positions[k] for i in entry.indices for k in phi.columns[i]}
        if len(targets) != 1:
            raise NotGradedError(
                f"{phi.name} is not in Aut({grading.name}): component {list(entry.degree)} "
                f"meets {len(targets)} components"
            )
        perm.append(targets.pop())
    try:
        return SupportPerm(grading, perm)
    except GroupError as e:
        raise NotGradedError(f"{phi.name} is not in Aut({grading.name}): {str(e)}") from e


class StabDiag(NamedTuple):
    in_stab: bool
    in_diag: bool


def stab_diag_membership(grading: Grading, phi: AlgAutomorphism) -> StabDiag:
    """
    Membership of phi in Stab(Gamma) and Diag(Gamma).

    in_stab: phi maps every component to itself. in_diag: additionally phi acts
    on each component by a scalar.
    """
    perm = graded_automorphism_check(grading, phi)
    if not perm.is_identity():
        return StabDiag(False, False)
    for entry in grading.support():
        scalar: Optional[CycScalar] = None
        for i in entry.indices:
            col = phi.columns[i]
            if set(col) != {i}:
                return StabDiag(True, False)
            if scalar is None:
                scalar = col[i]
            elif col[i] != scalar:
                return StabDiag(True, False)
    return StabDiag(True, True)

