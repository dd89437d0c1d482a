"""
Extending a map on generators to an automorphism.
"""

import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from ..algebras.base import AlgElement, StructAlgebra
from ..core.linalg import EchelonBasis, SparseVec
from ..exceptions import CertificationError
from .base import AlgAutomorphism, automorphism_check

logger = logging.getLogger(__name__)


class NoExtension(NamedTuple):
    """
    Why a generator assignment does not extend.

    reason is one of ``inconsistent`` (a linear relation among words is not
    respected by the images), ``not generating`` (the words span a proper
    subspace), ``not invertible`` or ``not multiplicative`` (the linear
    extension fails on a basis pair; ``witness`` holds the pair).
    """

    reason: str
    witness: Optional[Tuple[str, ...]] = None


def extend_from_generators(
    algebra: StructAlgebra,
    generators: Sequence[AlgElement],
    images: Sequence[AlgElement],
    name: str = "extension",
    reverse: bool = False,
) -> Union[AlgAutomorphism, NoExtension]:
    """
    The automorphism with x_i -> y_i, if there is one.

    Words in the generators are built breadth first: layer 0 holds the unit
    and the generators, layer n + 1 the products of a layer-n word with any
    earlier word (both orders). Words whose value is dependent on the ones
    already kept are checked for consistency and dropped. The linear map read
    off a full-rank set of words is then certified.

    Args:
        algebra: The algebra
        generators: x_1, ..., x_m
        images: y_1, ..., y_m
        name: Name of the automorphism
        reverse: Enumerate the pairs of each layer in reverse order

    Returns:
        Certified AlgAutomorphism, or NoExtension with the reason

    Examples:
        >>> C = cayley_cd_basis()
        >>> ws = [C.basis(w) for w in ("w1", "w2", "w3")]
        >>> extend_from_generators(C, ws, ws).is_identity()
        True
    """
    if len(generators) != len(images):
        raise ValueError(f"{len(generators)} generators but {len(images)} images")
    span = EchelonBasis(algebra.dim)
    words: List[Tuple[SparseVec, SparseVec]] = []

    def add(vec: SparseVec, image: SparseVec) -> Optional[NoExtension]:
        residual, residual_image = span.reduce(vec, image)
        if residual:
            span.insert(vec, image)
            words.append((vec, image))
        elif residual_image:
            return NoExtension("inconsistent")
        return None

    seeds: List[Tuple[SparseVec, SparseVec]] = []
    if algebra.unit is not None:
        seeds.append((algebra.unit, algebra.unit))
    seeds += [(x.vec, y.vec) for x, y in zip(generators, images)]
    for vec, image in seeds:
        failure = add(vec, image)
        if failure is not None:
            logger.debug(f"{name}: generator images are inconsistent")
            return failure

    layer_start = 0
    while not span.is_full:
        layer_end = len(words)
        if layer_start == layer_end:
            logger.debug(f"{name}: words span only {span.rank} of {algebra.dim} dimensions")
            return NoExtension("not generating")
        pairs = [
            (a, b)
            for a in range(layer_end)
            for b in range(layer_end)
            if a >= layer_start or b >= layer_start
        ]
        if reverse:
            pairs.reverse()
        for a, b in pairs:
            if span.is_full:
                break
            (va, ia), (vb, ib) = words[a], words[b]
            failure = add(algebra.product_vec(va, vb), algebra.product_vec(ia, ib))
            if failure is not None:
                logger.debug(f"{name}: relation among words not respected by the images")
                return failure
        layer_start = layer_end

    solved = span.solve()
    columns = [solved[p] for p in range(algebra.dim)]
    try:
        return automorphism_check(algebra, columns, name=name)
    except CertificationError as e:
        if e.witness is None:
            return NoExtension("not invertible")
        return NoExtension("not multiplicative", e.witness)
