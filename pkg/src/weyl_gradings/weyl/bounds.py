"""
Exhaustive search for the support permutations that extend to Aut(U(Gamma)).

Every element of W(Gamma) permutes the support, keeps component dimensions
and is the restriction of an automorphism of the universal group. The search
assigns images to a generating subset of the support one element at a time,
pruning with sums and differences of already assigned elements, and checks
each complete assignment against the whole support.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebras.base import AlgElement
from ..config import get_settings
from ..core.linalg import rank
from ..exceptions import BoundExceededError, GroupError
from ..gradings.base import Grading
from ..groups.abelian import AbGroup, AbHom, Coords, enumerate_automorphisms
from .perm import Perm, PermGroup

logger = logging.getLogger(__name__)

Signature = Tuple[int, str]


class _Adder:
    def __init__(self, grading: Grading) -> None:
        self.group = grading.universal().group

    def __call__(self, a: Coords, b: Coords, sign: int) -> Coords:
        return self.group.normalize([x + sign * y for x, y in zip(a, b)])


def _offset_positions(embedding: Sequence[Coords], add: _Adder, sign: int) -> List[List[int]]:
    """table[s][t] = position of emb(s) + sign * emb(t) in the support, or -1."""
    index = {e: k for k, e in enumerate(embedding)}
    m = len(embedding)
    return [
        [index.get(add(embedding[s], embedding[t], sign), -1) for t in range(m)] for s in range(m)
    ]


def pair_signatures(grading: Grading) -> List[List[Signature]]:
    """
    sig[s][t] = (dim A_s A_t, commutation tag) for every pair of support entries.

    The commutation tag records c with x_s x_t = c x_t x_s when both components
    are one-dimensional and both products are nonzero; ``zero`` and
    ``one-sided`` mark vanishing products. Both entries are preserved by
    every graded automorphism.
    """
    A = grading.algebra
    table = grading.support()
    m = len(table)
    sig: List[List[Signature]] = []
    for s in range(m):
        row = []
        for t in range(m):
            products = [A.basis_product(i, j) for i in table[s].indices for j in table[t].indices]
            dim = rank(products, A.dim)
            tag = "-"
            if table[s].dim == 1 and table[t].dim == 1:
                (i,), (j,) = table[s].indices, table[t].indices
                ab = AlgElement(A, A.basis_product(i, j))
                ba = AlgElement(A, A.basis_product(j, i))
                if ab.is_zero and ba.is_zero:
                    tag = "zero"
                elif ab.is_zero or ba.is_zero:
                    tag = "one-sided"
                else:
                    c = ab.is_multiple_of(ba)
                    tag = c.to_string() if c is not None else "independent"
            row.append((dim, tag))
        sig.append(row)
    return sig


def support_preserving_upper_bound(
    grading: Grading, refine: bool = False, bound: Optional[int] = None
) -> PermGroup:
    """
    All support permutations preserving dimensions that extend to Aut(U(Gamma)).

    Args:
        grading: Grading with finite support
        refine: Also require the pair signatures of ``pair_signatures`` to be preserved
        bound: Maximum number of search nodes (defaults to ``bounds.upper_bound_candidates``)

    Returns:
        PermGroup of the surviving permutations (no generators recorded)

    Raises:
        BoundExceededError: If the search visits more than ``bound`` nodes;
            ``partial_count`` holds the permutations found so far

    Examples:
        >>> support_preserving_upper_bound(builtin_grading("cd_cayley")).order
        168
    """
    if bound is None:
        bound = get_settings().bounds.upper_bound_candidates
    data = grading.universal()
    U = data.group
    table = grading.support()
    m = len(table)
    dims = table.dims
    emb = [tuple(e) for e in data.embedding]
    index = {e: k for k, e in enumerate(emb)}
    add = _Adder(grading)
    sums = _offset_positions(emb, add, 1)
    diffs = _offset_positions(emb, add, -1)
    sig = pair_signatures(grading) if refine else None

    def compatible(s: int, t: int, a: int, b: int) -> bool:
        # s -> a and t -> b
        for offsets in (sums, diffs):
            x, y = offsets[s][t], offsets[a][b]
            if (x < 0) != (y < 0):
                return False
            if x >= 0 and dims[x] != dims[y]:
                return False
        if sig is not None and (sig[s][t] != sig[a][b] or sig[t][s] != sig[b][a]):
            return False
        return True

    basis = data.basis
    emb_matrix = np.array(emb, dtype=np.int64).T.reshape(U.rank, m)
    words = [np.array(w, dtype=np.int64) for w in data.generator_words]
    found: List[Perm] = []
    images: List[int] = []
    nodes = 0

    def leaf() -> None:
        chosen = np.array([emb[a] for a in images], dtype=np.int64).reshape(len(images), U.rank)
        columns = [[int(x) for x in w @ chosen] for w in words]
        try:
            mu = AbHom.from_images(U, U, columns)
        except GroupError:
            return
        for b, a in zip(basis, images):
            if mu.apply(emb[b]) != emb[a]:
                return
        moved = mu.matrix @ emb_matrix
        perm = []
        for s in range(m):
            image = U.normalize([int(x) for x in moved[:, s]])
            t = index.get(image)
            if t is None or dims[t] != dims[s]:
                return
            perm.append(t)
        if len(set(perm)) != m:
            return
        if sig is not None:
            for s in range(m):
                for t in range(m):
                    if sig[s][t] != sig[perm[s]][perm[t]]:
                        return
        found.append(tuple(perm))

    def extend(i: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > bound:
            raise BoundExceededError(
                f"Upper-bound search on {grading.name} exceeds {bound} nodes",
                bound_name="upper_bound_candidates",
                bound=bound,
                partial_count=len(found),
            )
        if i == len(basis):
            leaf()
            return
        s = basis[i]
        for a in range(m):
            if dims[a] != dims[s] or a in images:
                continue
            if not compatible(s, s, a, a):
                continue
            if all(compatible(basis[j], s, images[j], a) for j in range(i)):
                images.append(a)
                extend(i + 1)
                images.pop()

    extend(0)
    kind = "refined" if refine else "raw"
    logger.info(
        f"Support-preserving upper bound ({kind}) for {grading.name}: {len(found)} "
        f"after {nodes} nodes"
    )
    return PermGroup(grading, found)


def structured_z25_count() -> Dict[str, int]:
    """
    |{mu in Aut(Z_2^5) : mu(T) = T}| for T = {0} x Z_2^3, from the block form

        [ A 0 ]
        [ C D ]   with A in GL_2(2), D in GL_3(2) and C arbitrary.

    Returns:
        Mapping with the factors and their product under ``order``
    """
    top = len(enumerate_automorphisms(AbGroup(0, (2, 2))))
    bottom = len(enumerate_automorphisms(AbGroup(0, (2, 2, 2))))
    corner = 2 ** (2 * 3)
    return {"gl2": top, "gl3": bottom, "corner": corner, "order": top * bottom * corner}
