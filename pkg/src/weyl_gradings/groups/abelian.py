"""
Finitely generated abelian groups, their elements and homomorphisms.

Groups are Z^r x Z_{m_1} x ... x Z_{m_s} with coordinates ordered free part
first. Elements keep torsion coordinates reduced into [0, m_i). Homomorphisms
are integer matrices acting on coordinate columns.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..config import get_settings
from ..core.base import Artifact
from ..exceptions import BoundExceededError, GroupError
from .smith import invariant_factors

logger = logging.getLogger(__name__)

Coords = Tuple[int, ...]


@dataclass(frozen=True)
class AbGroup(Artifact):
    """
    The group Z^free_rank x Z_{moduli[0]} x ... .

    Attributes:
        free_rank: Number of free coordinates
        moduli: Torsion moduli in recorded order (divisibility chain or symplectic pairs)
        name: Optional display tag, ignored by equality
    """

    free_rank: int
    moduli: Tuple[int, ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    kind = "group"

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise GroupError(f"Negative free rank {self.free_rank}")
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        if any(m < 2 for m in self.moduli):
            raise GroupError(f"Torsion moduli must be >= 2, got {self.moduli}")

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""
        if not self.is_finite:
            return None
        return math.prod(self.moduli)

    def normalize(self, coords: Sequence[int]) -> Coords:
        if len(coords) != self.rank:
            raise GroupError(f"Expected {self.rank} coordinates, got {len(coords)}")
        r = self.free_rank
        return tuple(int(c) for c in coords[:r]) + tuple(
            int(c) % m for c, m in zip(coords[r:], self.moduli)
        )

    def element(self, coords: Sequence[int]) -> "AbElem":
        return AbElem(self, self.normalize(coords))

    def zero(self) -> "AbElem":
        return AbElem(self, (0,) * self.rank)

    def generator(self, index: int) -> "AbElem":
        coords = [0] * self.rank
        coords[index] = 1
        return AbElem(self, tuple(coords))

    def generators(self) -> List["AbElem"]:
        return [self.generator(i) for i in range(self.rank)]

    def element_coords(self) -> Iterator[Coords]:
        """
        Iterate coordinates of all elements in lexicographic order.

        Raises:
            GroupError: If the group is infinite
        """
        if not self.is_finite:
            raise GroupError(f"Cannot enumerate infinite group {self}")
        return itertools.product(*(range(m) for m in self.moduli))

    def elements(self) -> List["AbElem"]:
        return [AbElem(self, c) for c in self.element_coords()]

    def add(self, a: Sequence[int], b: Sequence[int]) -> Coords:
        r = self.free_rank
        return tuple(x + y for x, y in zip(a[:r], b[:r])) + tuple(
            (x + y) % m for x, y, m in zip(a[r:], b[r:], self.moduli)
        )

    def scale(self, k: int, a: Sequence[int]) -> Coords:
        return self.normalize([k * x for x in a])

    def coords_order(self, coords: Sequence[int]) -> Optional[int]:
        """Order of the element with these coordinates (None if infinite)."""
        r = self.free_rank
        if any(coords[:r]):
            return None
        result = 1
        for c, m in zip(coords[r:], self.moduli):
            result = math.lcm(result, m // math.gcd(m, c))
        return result

    def normal_form(self) -> Tuple[int, Tuple[int, ...]]:
        """
        Isomorphism invariant (free rank, invariant factors).

        Returns:
            Pair comparable across presentations
        """
        relations = []
        for i, m in enumerate(self.moduli):
            row = [0] * self.rank
            row[self.free_rank + i] = m
            relations.append(row)
        diag, _ = invariant_factors(self.rank, relations)
        free = sum(1 for d in diag if d == 0)
        torsion = tuple(sorted(d for d in diag if d > 1))
        return free, torsion

    def is_isomorphic(self, other: "AbGroup") -> bool:
        return self.normal_form() == other.normal_form()

    def to_dict(self) -> Dict[str, Any]:
        return {"free_rank": self.free_rank, "moduli": list(self.moduli)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **context: Any) -> "AbGroup":
        return cls(int(data["free_rank"]), tuple(int(m) for m in data["moduli"]))

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for m, run in itertools.groupby(self.moduli):
            count = len(list(run))
            parts.append(f"Z_{m}" if count == 1 else f"Z_{m}^{count}")
        return " x ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AbGroup({self})"


@dataclass(frozen=True, order=True)
class AbElem:
    """
    Element of an AbGroup.

    Attributes:
        group: Owning group
        coords: Normalized coordinates
    """

    group: AbGroup = field(compare=False)
    coords: Coords = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbElem):
            return NotImplemented
        return self.group == other.group and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __add__(self, other: "AbElem") -> "AbElem":
        return AbElem(self.group, self.group.add(self.coords, other.coords))

    def __neg__(self) -> "AbElem":
        return AbElem(self.group, self.group.scale(-1, self.coords))

    def __sub__(self, other: "AbElem") -> "AbElem":
        return self + (-other)

    def __mul__(self, k: int) -> "AbElem":
        return AbElem(self.group, self.group.scale(k, self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> Optional[int]:
        return self.group.coords_order(self.coords)

    def __repr__(self) -> str:
        return f"AbElem{self.coords}"


class AbHom:
    """
    Homomorphism between abelian groups given by an integer matrix.

    Column j holds the coordinates of the image of generator j. Rows belonging
    to torsion coordinates of the target are reduced modulo their modulus.

    Attributes:
        source: Domain
        target: Codomain
        matrix: numpy int64 array of shape (target.rank, source.rank)
    """

    def __init__(
        self, source: AbGroup, target: AbGroup, matrix: Any, check: bool = True
    ) -> None:
        self.source = source
        self.target = target
        mat = np.array(matrix, dtype=np.int64).reshape(target.rank, source.rank)
        r = target.free_rank
        for i, m in enumerate(target.moduli):
            mat[r + i] %= m
        self.matrix = mat
        if check:
            self._check_well_defined()

    def _check_well_defined(self) -> None:
        r_s = self.source.free_rank
        for i, m in enumerate(self.source.moduli):
            col = self.matrix[:, r_s + i]
            image = self.target.scale(m, [int(x) for x in col])
            if any(image):
                raise GroupError(
                    f"Generator {r_s + i} of order {m} maps to {tuple(int(x) for x in col)}, "
                    f"which is not killed by {m}"
                )

    @classmethod
    def identity(cls, group: AbGroup) -> "AbHom":
        return cls(group, group, np.eye(group.rank, dtype=np.int64), check=False)

    @classmethod
    def from_images(
        cls, source: AbGroup, target: AbGroup, images: Sequence[Sequence[int]]
    ) -> "AbHom":
        """Build the homomorphism sending generator j to images[j]."""
        if len(images) != source.rank:
            raise GroupError(f"Need {source.rank} generator images, got {len(images)}")
        mat = np.zeros((target.rank, source.rank), dtype=np.int64)
        for j, img in enumerate(images):
            mat[:, j] = target.normalize(img)
        return cls(source, target, mat)

    def apply(self, coords: Sequence[int]) -> Coords:
        vec = self.matrix @ np.array(coords, dtype=np.int64)
        return self.target.normalize([int(x) for x in vec])

    def __call__(self, elem: AbElem) -> AbElem:
        return AbElem(self.target, self.apply(elem.coords))

    def compose(self, other: "AbHom") -> "AbHom":
        """self after other."""
        if other.target != self.source:
            raise GroupError(f"Cannot compose {other.target} -> ... with {self.source} -> ...")
        return AbHom(other.source, self.target, self.matrix @ other.matrix, check=False)

    def is_surjective(self) -> bool:
        relations = [list(map(int, self.matrix[:, j])) for j in range(self.source.rank)]
        for i, m in enumerate(self.target.moduli):
            row = [0] * self.target.rank
            row[self.target.free_rank + i] = m
            relations.append(row)
        diag, _ = invariant_factors(self.target.rank, relations)
        return all(d == 1 for d in diag)

    def is_bijective(self) -> bool:
        """
        Bijectivity test.

        Surjective homomorphisms between isomorphic finitely generated abelian
        groups are bijective, so surjectivity plus matching normal forms suffices.
        """
        return self.source.is_isomorphic(self.target) and self.is_surjective()

    def determinant_mod(self, p: int) -> int:
        """Determinant of the matrix modulo p (square matrices only)."""
        return int(sympy.Matrix(self.matrix.tolist()).det()) % p

    def key(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.matrix.T.flatten())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"AbHom({self.source} -> {self.target}, {self.matrix.tolist()})"


def quotient_presentation(
    num_generators: int, relations: Sequence[Sequence[int]]
) -> Tuple[AbGroup, AbHom]:
    """
    Normal form of Z^n modulo the span of the relation vectors.

    Args:
        num_generators: n
        relations: Integer vectors of length n

    Returns:
        (group, projection) where projection sends the i-th standard generator of
        Z^n to its class; the group lists free coordinates first, then torsion
        moduli in divisibility order with trivial factors dropped

    Examples:
        >>> G, _ = quotient_presentation(2, [(2, 0), (0, 2)])
        >>> str(G)
        'Z_2^2'
    """
    for rel in relations:
        if len(rel) != num_generators:
            raise GroupError(f"Relation {tuple(rel)} does not have length {num_generators}")

    diag, v = invariant_factors(num_generators, relations)
    free_idx = [i for i, d in enumerate(diag) if d == 0]
    torsion_idx = [i for i, d in enumerate(diag) if d > 1]
    group = AbGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))

    rows = []
    for i in free_idx + torsion_idx:
        rows.append([v[j][i] for j in range(num_generators)])
    source = AbGroup(num_generators)
    matrix = np.array(rows, dtype=np.int64).reshape(group.rank, num_generators)
    projection = AbHom(source, group, matrix, check=False)
    logger.debug(f"Quotient of Z^{num_generators} by {len(relations)} relations: {group}")
    return group, projection


def enumerate_automorphisms(
    group: AbGroup,
    bound: Optional[int] = None,
    pair_constraint: Optional[Callable[[int, int, Coords, Coords], bool]] = None,
    candidate_filter: Optional[Callable[[int, Coords], bool]] = None,
) -> List[AbHom]:
    """
    All automorphisms of a finite abelian group.

    Generator images are assigned one generator at a time; an assignment is
    kept only if the image of generator i is killed by its modulus and the
    images so far generate a subgroup of the expected order. Complete
    assignments are exactly the bijective endomorphisms.

    Args:
        group: Finite group
        bound: Maximum group order (defaults to the configured bound)
        pair_constraint: Optional predicate (i, j, image_i, image_j) for j <= i,
            applied while assigning; used to restrict to subgroups such as Aut(T, beta)
        candidate_filter: Optional predicate (i, image_i) restricting single images

    Returns:
        Automorphisms in lexicographic order of their generator images

    Raises:
        BoundExceededError: If |group| exceeds the bound
        GroupError: If the group is infinite

    Examples:
        >>> len(enumerate_automorphisms(AbGroup(0, (2, 2, 2))))
        168
    """
    if bound is None:
        bound = get_settings().bounds.automorphism_group_order
    if not group.is_finite:
        raise GroupError(f"Cannot enumerate automorphisms of infinite group {group}")
    order = group.order or 1
    if order > bound:
        raise BoundExceededError(
            f"Group {group} has order {order}, above the automorphism enumeration bound {bound}",
            bound_name="automorphism_group_order",
            bound=bound,
        )

    elements = list(group.element_coords())
    n = group.rank
    candidates: List[List[Coords]] = []
    for i, m in enumerate(group.moduli):
        pool = [x for x in elements if not any(group.scale(m, x))]
        if candidate_filter is not None:
            pool = [x for x in pool if candidate_filter(i, x)]
        candidates.append(pool)

    results: List[AbHom] = []
    images: List[Coords] = []

    def extend(i: int, subgroup: List[Coords]) -> None:
        if i == n:
            results.append(AbHom.from_images(group, group, images))
            return
        m = group.moduli[i]
        members = set(subgroup)
        for x in candidates[i]:
            if pair_constraint is not None:
                if not pair_constraint(i, i, x, x):
                    continue
                if not all(pair_constraint(i, j, x, images[j]) for j in range(i)):
                    continue
            grown = []
            ok = True
            multiple = (0,) * n
            for k in range(1, m):
                multiple = group.add(multiple, x)
                if multiple in members:
                    ok = False
                    break
            if not ok:
                continue
            multiple = (0,) * n
            for _ in range(m):
                grown.extend(group.add(s, multiple) for s in subgroup)
                multiple = group.add(multiple, x)
            images.append(x)
            extend(i + 1, grown)
            images.pop()

    extend(0, [(0,) * n])
    logger.debug(f"Enumerated {len(results)} automorphisms of {group}")
    return results
