"""
Groups of support permutations and their breadth-first closure.

Permutations are tuples of support positions: p[s] is where component s goes.
Composition is (p * q)[s] = p[q[s]], i.e. p after q.
"""

import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import BoundExceededError, GroupError
from ..gradings.base import Grading
from ..groups.abelian import AbGroup, AbHom
from ..morphisms.base import SupportPerm

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for s, t in enumerate(p):
        inv[t] = s
    return tuple(inv)


def identity(n: int) -> Perm:
    return tuple(range(n))


class PermGroup:
    """
    A finite group of support permutations of one grading.

    Attributes:
        grading: The grading whose support is permuted
        elements: All elements, sorted lexicographically
        generators: The generators it was built from (possibly empty)
    """

    def __init__(
        self, grading: Grading, elements: Iterable[Perm], generators: Sequence[Perm] = ()
    ) -> None:
        self.grading = grading
        self.elements: List[Perm] = sorted(set(tuple(p) for p in elements))
        self.generators: List[Perm] = [tuple(g) for g in generators]
        self._members = frozenset(self.elements)

    @property
    def degree(self) -> int:
        return len(self.grading.support())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.elements)

    def contains(self, p: Sequence[int]) -> bool:
        return tuple(p) in self._members

    def __contains__(self, p: object) -> bool:
        return isinstance(p, (tuple, list)) and tuple(p) in self._members

    def is_closed(self) -> bool:
        """True if the element set contains the identity and is closed under products."""
        if identity(self.degree) not in self._members:
            return False
        gens = self.generators or self.elements
        return all(compose(g, p) in self._members for g in gens for p in self.elements) and all(
            inverse(g) in self._members for g in gens
        )

    def orbit_sizes(self) -> List[int]:
        """Sizes of the orbits on the support, in order of their least member."""
        seen = [False] * self.degree
        sizes = []
        gens = self.generators or self.elements
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = {start}
            queue = deque([start])
            while queue:
                s = queue.popleft()
                for g in gens:
                    t = g[s]
                    if t not in orbit:
                        orbit.add(t)
                        queue.append(t)
            for s in orbit:
                seen[s] = True
            sizes.append(len(orbit))
        return sizes

    def as_support_perms(self) -> List[SupportPerm]:
        return [SupportPerm(self.grading, p) for p in self.elements]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.grading.name == other.grading.name and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.grading.name, self.order))

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order} on {self.grading.name})"


def closure(
    grading: Grading, gens: Sequence[SupportPerm], bound: Optional[int] = None
) -> PermGroup:
    """
    The group generated by support permutations, by breadth-first search.

    Elements are reached as g * p for g a generator and p an element already
    found; the visiting order depends only on the generator order.

    Args:
        grading: The grading all generators act on
        gens: Support permutations
        bound: Maximum number of elements (defaults to ``bounds.closure_elements``)

    Returns:
        PermGroup with the generators recorded

    Raises:
        GroupError: If a generator belongs to another grading
        BoundExceededError: If the group has more than ``bound`` elements

    Examples:
        >>> closure(builtin_grading("cartan_cayley"), []).order
        1
    """
    if bound is None:
        bound = get_settings().bounds.closure_elements
    n = len(grading.support())
    words: List[Perm] = []
    for g in gens:
        if g.grading.name != grading.name or len(g.perm) != n:
            raise GroupError(f"Generator {g} does not act on the support of {grading.name}")
        if g.perm not in words and g.perm != identity(n):
            words.append(g.perm)

    start = identity(n)
    found = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in words:
            q = compose(g, p)
            if q in found:
                continue
            found.add(q)
            if len(found) > bound:
                raise BoundExceededError(
                    f"Closure on {grading.name} exceeds {bound} elements",
                    bound_name="closure_elements",
                    bound=bound,
                    partial_count=len(found),
                )
            queue.append(q)
    logger.info(f"Closure of {len(words)} generators on {grading.name}: order {len(found)}")
    return PermGroup(grading, found, words)


def elementary_transvections(group: AbGroup) -> List[AbHom]:
    """The automorphisms I + E_ij (i != j) of a finite group Z_m^n."""
    n = group.rank
    result = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            matrix = np.eye(n, dtype=np.int64)
            matrix[i, j] = 1
            result.append(AbHom(group, group, matrix))
    return result


def perm_from_degree_map(grading: Grading, mu: AbHom) -> Perm:
    """
    The support permutation s -> mu(deg s) of a grading-group automorphism.

    Raises:
        GroupError: If mu does not preserve the support with its dimensions
    """
    table = grading.support()
    perm = []
    for entry in table:
        image = mu.apply(entry.degree)
        if not table.contains(image):
            raise GroupError(f"{mu} moves {list(entry.degree)} out of the support")
        perm.append(table.position(image))
    return SupportPerm(grading, perm).perm

