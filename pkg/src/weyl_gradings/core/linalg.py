"""
Exact sparse linear algebra over cyclotomic fields.

Vectors are dictionaries ``{index: CycScalar}`` holding nonzero entries only.
EchelonBasis maintains a row-echelon span together with a payload vector per
row, which is how the workbench tracks images of words during automorphism
extension and coefficient vectors during basis changes.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalars import CycScalar

logger = logging.getLogger(__name__)

SparseVec = Dict[int, CycScalar]


def vec_axpy(acc: SparseVec, coeff: CycScalar, vec: SparseVec) -> None:
    """In place: acc += coeff * vec, dropping entries that cancel."""
    for k, v in vec.items():
        term = coeff * v
        if k in acc:
            total = acc[k] + term
            if total.is_zero:
                del acc[k]
            else:
                acc[k] = total
        elif not term.is_zero:
            acc[k] = term


def vec_scale(vec: SparseVec, coeff: CycScalar) -> SparseVec:
    if coeff.is_zero:
        return {}
    return {k: coeff * v for k, v in vec.items()}


def vec_add(a: SparseVec, b: SparseVec) -> SparseVec:
    out = dict(a)
    for k, v in b.items():
        if k in out:
            total = out[k] + v
            if total.is_zero:
                del out[k]
            else:
                out[k] = total
        else:
            out[k] = v
    return out


def vec_sub(a: SparseVec, b: SparseVec) -> SparseVec:
    out = dict(a)
    for k, v in b.items():
        if k in out:
            total = out[k] - v
            if total.is_zero:
                del out[k]
            else:
                out[k] = total
        else:
            out[k] = -v
    return out


class EchelonBasis:
    """
    Row-echelon span with payload tracking.

    Each stored row is a pair (vector, payload); the pivot of a row is the
    smallest index of its vector and its pivot entry is 1. Linear relations
    between vectors are mirrored on payloads, so after ``reduce`` a zero
    residual vector paired with a nonzero residual payload witnesses an
    inconsistency between the two sides.

    Attributes:
        dim: Ambient dimension of the vectors
    """

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self._rows: Dict[int, Tuple[SparseVec, SparseVec]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.dim

    def reduce(
        self, vec: SparseVec, payload: Optional[SparseVec] = None
    ) -> Tuple[SparseVec, SparseVec]:
        """
        Reduce a vector against the stored rows.

        Args:
            vec: Vector to reduce
            payload: Companion payload, transformed alongside

        Returns:
            (residual vector, residual payload)
        """
        vec = dict(vec)
        payload = dict(payload or {})
        for pivot in sorted(self._rows):
            coeff = vec.get(pivot)
            if coeff is None:
                continue
            row, row_payload = self._rows[pivot]
            neg = -coeff
            vec_axpy(vec, neg, row)
            vec_axpy(payload, neg, row_payload)
        return vec, payload

    def insert(self, vec: SparseVec, payload: Optional[SparseVec] = None) -> bool:
        """
        Add a vector to the span if it is independent.

        Args:
            vec: Vector to add
            payload: Companion payload

        Returns:
            True if the rank grew
        """
        residual, residual_payload = self.reduce(vec, payload)
        if not residual:
            return False
        pivot = min(residual)
        scale = residual[pivot].inverse()
        self._rows[pivot] = (vec_scale(residual, scale), vec_scale(residual_payload, scale))
        return True

    def solve(self) -> Dict[int, SparseVec]:
        """
        Back-substitute a full-rank basis to reduced form.

        Returns:
            Map pivot p -> payload paired with the unit vector e_p

        Raises:
            ValueError: If the span is not full
        """
        if not self.is_full:
            raise ValueError(f"Span has rank {self.rank} < {self.dim}")
        pivots = sorted(self._rows, reverse=True)
        reduced: Dict[int, Tuple[SparseVec, SparseVec]] = {}
        for pivot in pivots:
            row, payload = self._rows[pivot]
            row = dict(row)
            payload = dict(payload)
            for other in [k for k in row if k != pivot]:
                coeff = row[other]
                other_row, other_payload = reduced[other]
                vec_axpy(row, -coeff, other_row)
                vec_axpy(payload, -coeff, other_payload)
            reduced[pivot] = (row, payload)
        return {p: payload for p, (_, payload) in reduced.items()}


def rank(vectors: Iterable[SparseVec], dim: int) -> int:
    """Rank of a family of sparse vectors."""
    basis = EchelonBasis(dim)
    for v in vectors:
        basis.insert(v)
    return basis.rank


def express(vectors: Sequence[SparseVec], target: SparseVec, dim: int) -> Optional[SparseVec]:
    """
    Coefficients c with target = sum c_j vectors[j], if any.

    Args:
        vectors: Spanning family
        target: Vector to express
        dim: Ambient dimension

    Returns:
        Sparse coefficient vector indexed by position in ``vectors``, or None
    """
    basis = EchelonBasis(dim)
    one = None
    for j, v in enumerate(vectors):
        if v:
            one = next(iter(v.values())).one(next(iter(v.values())).conductor)
            break
    if one is None:
        return {} if not target else None
    for j, v in enumerate(vectors):
        basis.insert(v, {j: one})
    residual, payload = basis.reduce(target, {})
    if residual:
        return None
    return {k: -c for k, c in payload.items()}


def invert_columns(columns: Sequence[SparseVec], one: CycScalar) -> List[SparseVec]:
    """
    Invert the square matrix with the given columns.

    Args:
        columns: Column j is the image of e_j
        one: Unit scalar of the working field

    Returns:
        Columns of the inverse matrix

    Raises:
        ValueError: If the matrix is singular
    """
    n = len(columns)
    basis = EchelonBasis(n)
    for j, col in enumerate(columns):
        basis.insert(col, {j: one})
    if not basis.is_full:
        raise ValueError(f"Matrix is singular (rank {basis.rank} < {n})")
    solved = basis.solve()
    return [solved[p] for p in range(n)]
