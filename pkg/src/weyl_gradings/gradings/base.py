"""
Group gradings on structure-constant algebras.

A Grading assigns a degree in an abelian group to every basis vector of an
algebra; the basis is adapted, so every component is spanned by basis
vectors and most questions about the grading become combinatorial.
"""

import logging
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..algebras.base import StructAlgebra
from ..core.base import Artifact
from ..exceptions import GroupError, HomogeneityError, SerializationError
from ..groups.abelian import AbElem, AbGroup, AbHom, Coords, quotient_presentation
from ..groups.smith import solve_in_quotient

logger = logging.getLogger(__name__)


class SupportEntry(NamedTuple):
    """One homogeneous component: its degree, dimension and basis indices."""

    degree: Coords
    dim: int
    indices: Tuple[int, ...]


class SupportTable:
    """
    Support of a grading with the dimension of each component.

    Entries are sorted by degree coordinates (lexicographic).
    """

    def __init__(self, group: AbGroup, entries: Sequence[SupportEntry]) -> None:
        self.group = group
        self.entries: List[SupportEntry] = sorted(entries, key=lambda e: e.degree)
        self._position = {e.degree: k for k, e in enumerate(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.entries)

    def __getitem__(self, k: int) -> SupportEntry:
        return self.entries[k]

    @property
    def degrees(self) -> List[Coords]:
        return [e.degree for e in self.entries]

    @property
    def dims(self) -> List[int]:
        return [e.dim for e in self.entries]

    def position(self, degree: Sequence[int]) -> int:
        """Index of the entry with this degree."""
        key = self.group.normalize(degree)
        try:
            return self._position[key]
        except KeyError as e:
            raise GroupError(f"{key} is not in the support") from e

    def contains(self, degree: Sequence[int]) -> bool:
        return self.group.normalize(degree) in self._position

    def to_text(self, labels: Sequence[str]) -> str:
        """Canonical text form: one line per component, ``degree<TAB>dim<TAB>labels``."""
        lines = [f"group\t{self.group}"]
        for e in self.entries:
            names = " ".join(labels[i] for i in e.indices)
            lines.append(f"{list(e.degree)}\t{e.dim}\t{names}")
        return "\n".join(lines) + "\n"


class UniversalData(NamedTuple):
    """
    The universal group of a grading and how the support sits inside it.

    Attributes:
        group: U(Gamma)
        embedding: Coordinates in U of each support entry (support order)
        triples: Support-index triples (s, t, u) with 0 != A_s A_t meeting A_u
        basis: Support indices of a subset generating U
        coefficients: For each support entry, integer coefficients over ``basis``
        generator_words: For each standard generator of U, coefficients over ``basis``
    """

    group: AbGroup
    embedding: List[Coords]
    triples: List[Tuple[int, int, int]]
    basis: List[int]
    coefficients: List[List[int]]
    generator_words: List[List[int]]


class Grading(Artifact):
    """
    Grading of an algebra by an abelian group on an adapted basis.

    Attributes:
        algebra: The graded algebra
        group: Grading group
        degrees: Degree coordinates of each basis vector
        name: Optional tag

    Raises:
        HomogeneityError: On construction, if some b_i b_j has a term outside
            degree deg(b_i) + deg(b_j)
    """

    kind = "grading"

    def __init__(
        self,
        algebra: StructAlgebra,
        group: AbGroup,
        degrees: Sequence[Sequence[int]],
        name: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        if len(degrees) != algebra.dim:
            raise HomogeneityError(
                f"Grading needs {algebra.dim} degrees, got {len(degrees)}"
            )
        self.algebra = algebra
        self.group = group
        self.degrees: List[Coords] = [group.normalize(d) for d in degrees]
        self.name = name or f"{algebra.name}_grading"
        self.metadata: Dict[str, Any] = dict(metadata or {})
        self._support: Optional[SupportTable] = None
        self._universal: Optional[UniversalData] = None
        self.validate()

    def degree(self, key: Any) -> AbElem:
        return self.group.element(self.degrees[self.algebra.index(key)])

    def validate(self) -> None:
        """
        Check A_g A_h in A_{g+h} on every basis pair.

        Raises:
            HomogeneityError: Carrying the first offending (b_i, b_j, b_k) triple
        """
        labels = self.algebra.labels
        for i, j, vec in self.algebra.structure_constants():
            expected = self.group.add(self.degrees[i], self.degrees[j])
            for k in vec:
                if self.degrees[k] != expected:
                    triple = (labels[i], labels[j], labels[k])
                    raise HomogeneityError(
                        f"{self.name}: {labels[i]}*{labels[j]} has a term in {labels[k]} "
                        f"of degree {self.degrees[k]}, expected {expected}",
                        triple,
                    )
        logger.debug(f"Validated grading {self.name}")

    # ── Support ──────────────────────────────────────────────────────

    def support(self) -> SupportTable:
        """Support entries with dimensions, sorted by degree."""
        if self._support is None:
            components: Dict[Coords, List[int]] = {}
            for i, d in enumerate(self.degrees):
                components.setdefault(d, []).append(i)
            entries = [SupportEntry(d, len(idx), tuple(idx)) for d, idx in components.items()]
            self._support = SupportTable(self.group, entries)
        return self._support

    def component_positions(self) -> List[int]:
        """Support position of each basis vector."""
        table = self.support()
        return [table.position(d) for d in self.degrees]

    def component(self, degree: Sequence[int]) -> Tuple[int, ...]:
        """Basis indices spanning A_g (empty if g is outside the support)."""
        table = self.support()
        if not table.contains(degree):
            return ()
        return table[table.position(degree)].indices

    # ── Universal group ──────────────────────────────────────────────

    def universal(self) -> UniversalData:
        """
        U(Gamma) with the support embedding and a generating subset of the support.

        U is the free abelian group on the support modulo s + t - u for every
        product of basis vectors from A_s and A_t with a term in A_u.
        """
        if self._universal is not None:
            return self._universal
        table = self.support()
        m = len(table)
        pos = self.component_positions()
        triples = sorted(
            {
                (pos[i], pos[j], pos[k])
                for i, j, vec in self.algebra.structure_constants()
                for k in vec
            }
        )
        relations = []
        for s, t, u in triples:
            rel = [0] * m
            rel[s] += 1
            rel[t] += 1
            rel[u] -= 1
            relations.append(rel)
        group, projection = quotient_presentation(m, relations)
        embedding = [projection.apply([1 if j == s else 0 for j in range(m)]) for s in range(m)]

        basis: List[int] = []
        for s in range(m):
            if not any(embedding[s]):
                continue
            found = solve_in_quotient(
                [embedding[b] for b in basis], group.moduli, group.free_rank, embedding[s]
            )
            if found is None:
                basis.append(s)
        columns = [embedding[b] for b in basis]
        coefficients = []
        for s in range(m):
            found = solve_in_quotient(columns, group.moduli, group.free_rank, embedding[s])
            if found is None:
                raise GroupError(f"Support entry {s} not in the span of the chosen generators")
            coefficients.append(found)
        generator_words = []
        for g in group.generators():
            found = solve_in_quotient(columns, group.moduli, group.free_rank, g.coords)
            if found is None:
                raise GroupError(f"Support of {self.name} does not generate its universal group")
            generator_words.append(found)

        self._universal = UniversalData(
            AbGroup(group.free_rank, group.moduli, name=f"U({self.name})"),
            embedding,
            triples,
            basis,
            coefficients,
            generator_words,
        )
        logger.info(f"Universal group of {self.name} is {group}")
        return self._universal

    def universal_grading(self) -> "Grading":
        """The same algebra graded by U(Gamma)."""
        data = self.universal()
        pos = self.component_positions()
        return Grading(
            self.algebra,
            data.group,
            [data.embedding[p] for p in pos],
            name=f"{self.name}_universal",
        )

    def induce(self, alpha: AbHom, name: Optional[str] = None) -> "Grading":
        """
        Coarsening along a homomorphism of grading groups.

        Args:
            alpha: Homomorphism from ``self.group``
            name: Name of the induced grading

        Returns:
            Grading with degrees alpha(deg b_i)
        """
        if alpha.source != self.group:
            raise GroupError(f"Cannot induce {self.name} along a map out of {alpha.source}")
        return Grading(
            self.algebra,
            alpha.target,
            [alpha.apply(d) for d in self.degrees],
            name=name or f"{self.name}_induced",
        )

    # ── Serialization ────────────────────────────────────────────────

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "name": self.name,
            "algebra": self.algebra.name,
            "group": self.group.to_dict(),
            "degrees": [list(d) for d in self.degrees],
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **context: Any) -> "Grading":
        """
        Args:
            data: Output of ``to_dict``
            algebra: The StructAlgebra named by ``data["algebra"]`` (required context)
        """
        if data.get("kind", "grading") != "grading":
            raise SerializationError(f"Expected a grading, got {data.get('kind')}")
        algebra = context.get("algebra")
        if algebra is None or algebra.name != data["algebra"]:
            raise SerializationError(
                f"Grading {data.get('name')} needs algebra {data.get('algebra')}"
            )
        return cls(
            algebra,
            AbGroup.from_dict(data["group"]),
            data["degrees"],
            name=data["name"],
            metadata=data.get("metadata"),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grading):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.name, self.algebra.name))


def grading_make(
    algebra: StructAlgebra,
    group: AbGroup,
    degree: Dict[str, Sequence[int]],
    name: Optional[str] = None,
) -> Grading:
    """
    Grading from a label -> degree mapping.

    Raises:
        HomogeneityError: If a basis vector has no degree or homogeneity fails
    """
    missing = [label for label in algebra.labels if label not in degree]
    if missing:
        raise HomogeneityError(f"No degree for {missing}")
    return Grading(algebra, group, [degree[label] for label in algebra.labels], name=name)


def support(grading: Grading) -> SupportTable:
    return grading.support()


def universal_abelian_group(grading: Grading) -> Tuple[AbGroup, List[Coords]]:
    """
    (U(Gamma), embedding of the support entries into U).

    Examples:
        >>> U, _ = universal_abelian_group(builtin_grading("cartan_cayley"))
        >>> str(U)
        'Z^2'
    """
    data = grading.universal()
    return data.group, data.embedding


def induce(grading: Grading, alpha: AbHom, name: Optional[str] = None) -> Grading:
    return grading.induce(alpha, name)
