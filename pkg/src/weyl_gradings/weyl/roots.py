"""
Root systems attached to the Cartan gradings.

For the octonions the roots are the nonzero support elements together with
the sums of non-proportional pairs of them (type G_2); for the Albert algebra
the sums are taken inside the support of iota_1 only (type F_4). In both
cases the nonzero support elements are the short roots.
"""

import logging
from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

import sympy

from ..exceptions import UnknownObjectError
from ..gradings.base import Grading
from ..groups.abelian import Coords

logger = logging.getLogger(__name__)


def _add(a: Sequence[int], b: Sequence[int]) -> Coords:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Sequence[int]) -> Coords:
    return tuple(-x for x in a)


class RootSystem:
    """
    A finite set of lattice vectors with the W-invariant inner product
    (sum_alpha alpha alpha^T)^{-1}.

    Attributes:
        roots: All roots, sorted
        short: Roots of minimal length
        long: The remaining roots
        gram: Gram matrix of the invariant inner product (sympy, rational)
    """

    def __init__(self, roots: Sequence[Coords]) -> None:
        self.roots: List[Coords] = sorted(set(tuple(r) for r in roots))
        if not self.roots:
            raise UnknownObjectError("Empty root system")
        n = len(self.roots[0])
        total = sympy.zeros(n, n)
        for r in self.roots:
            v = sympy.Matrix(r)
            total += v * v.T
        self.gram = total.inv()
        lengths = {r: self.inner_product(r, r) for r in self.roots}
        shortest = min(lengths.values())
        self.short: List[Coords] = [r for r in self.roots if lengths[r] == shortest]
        self.long: List[Coords] = [r for r in self.roots if lengths[r] != shortest]

    def inner_product(self, a: Sequence[int], b: Sequence[int]) -> sympy.Rational:
        return (sympy.Matrix([list(a)]) * self.gram * sympy.Matrix(list(b)))[0, 0]

    def is_closed_under_negation(self) -> bool:
        members = set(self.roots)
        return all(_neg(r) in members for r in self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"RootSystem({len(self.roots)} roots, {len(self.short)} short)"


def _pair_sums(vectors: Sequence[Coords]) -> List[Coords]:
    out = []
    for a, b in combinations(vectors, 2):
        if b != _neg(a):
            out.append(_add(a, b))
    return out


def phi_root_system(grading: Grading) -> RootSystem:
    """
    The root system of a Cartan grading.

    Args:
        grading: cartan_cayley or albert_cartan

    Returns:
        RootSystem with 12 roots (G_2) or 48 roots (F_4)

    Raises:
        UnknownObjectError: For any other grading

    Examples:
        >>> len(phi_root_system(builtin_grading("cartan_cayley")))
        12
    """
    zero = (0,) * grading.group.rank
    support = [d for d in grading.support().degrees if d != zero]
    if grading.name == "cartan_cayley":
        generating = support
    elif grading.name == "albert_cartan":
        labels = grading.algebra.labels
        generating = sorted(
            {grading.degrees[k] for k, label in enumerate(labels) if label.startswith("i1(")}
        )
    else:
        raise UnknownObjectError(f"No root system is attached to {grading.name}")
    roots = [r for r in set(support) | set(_pair_sums(generating)) if r != zero]
    system = RootSystem(roots)
    logger.info(
        f"Root system of {grading.name}: {len(system)} roots, {len(system.short)} short"
    )
    return system


def symmetric_subsets(system: RootSystem) -> List[FrozenSet[Coords]]:
    """
    Subsets S of the short roots with S = {+-d} u {g short : (g, d) = 0} for every d in S.

    Each short root d determines the only candidate containing it, so the
    search runs over the short roots and keeps the candidates that pass.
    """
    short = system.short
    found = set()
    for d in short:
        candidate = frozenset(
            [d, _neg(d)] + [g for g in short if system.inner_product(g, d) == 0]
        )
        ok = True
        for e in candidate:
            other = frozenset(
                [e, _neg(e)] + [g for g in short if system.inner_product(g, e) == 0]
            )
            if other != candidate:
                ok = False
                break
        if ok:
            found.add(candidate)
    return sorted(found, key=sorted)
