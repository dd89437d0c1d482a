"""
Matrix algebras with Pauli gradings.

For moduli (l_1, ..., l_r) the algebra M_l(F), l = prod l_i, has the basis
X_t = X_{a_1}^{i_1} X_{b_1}^{j_1} ... X_{a_r}^{i_r} X_{b_r}^{j_r} indexed by
t = (i_1, j_1, ..., i_r, j_r) in T = prod (Z_{l_i})^2. Each X_{a_i}, X_{b_i}
has order l_i and X_{b_i} X_{a_i} = eps_i^{-1} X_{a_i} X_{b_i}, so products of
basis elements are X_s X_t = prod_i eps_i^{-j_i k_i} X_{s+t} for
s = (.., i_i, j_i, ..) and t = (.., k_i, l_i, ..).
"""

import logging
import math
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..config import get_settings
from ..core.linalg import SparseVec
from ..core.scalars import DEFAULT_CONDUCTOR, CycScalar, root_of_unity
from ..exceptions import BoundExceededError
from ..groups.abelian import AbGroup, Coords
from ..groups.bicharacters import Bicharacter, standard_bicharacter
from .base import StructAlgebra

logger = logging.getLogger(__name__)


def pauli_conductor(moduli: Sequence[int]) -> int:
    """
    Field conductor for a Pauli algebra.

    Homogeneous elements satisfy X_t^l = +-1, so normalizing them needs
    zeta_{2l}; 24 keeps i, omega and sqrt(2) available.
    """
    return math.lcm(DEFAULT_CONDUCTOR, *(2 * m for m in moduli))


def pauli_label(t: Sequence[int]) -> str:
    return "X[" + ",".join(str(c) for c in t) + "]"


def pauli_exponent(
    moduli: Sequence[int], conductor: int, s: Sequence[int], t: Sequence[int]
) -> int:
    """Exponent k with X_s X_t = zeta_N^k X_{s+t}."""
    total = 0
    for f, m in enumerate(moduli):
        total -= s[2 * f + 1] * t[2 * f] * (conductor // m)
    return total % conductor


def _check_degree(name: str, value: int, bound_name: str, bound: int) -> None:
    if value > bound:
        raise BoundExceededError(
            f"{name} has matrix degree {value}, above the {bound_name} bound {bound}",
            bound_name=bound_name,
            bound=bound,
        )


@lru_cache(maxsize=None)
def _pauli_cached(moduli: Tuple[int, ...]) -> Tuple[StructAlgebra, AbGroup, Bicharacter]:
    T, beta = standard_bicharacter(moduli)
    N = pauli_conductor(moduli)
    elements: List[Coords] = list(T.element_coords())
    index = {t: k for k, t in enumerate(elements)}
    table: Dict[Tuple[int, int], SparseVec] = {}
    for i, s in enumerate(elements):
        for j, t in enumerate(elements):
            k = pauli_exponent(moduli, N, s, t)
            table[(i, j)] = {index[T.add(s, t)]: root_of_unity(N, k)}
    one = CycScalar.one(N)
    size = math.prod(moduli)
    algebra = StructAlgebra(
        "pauli_" + "x".join(str(m) for m in moduli) if moduli else "pauli_trivial",
        [pauli_label(t) for t in elements],
        table,
        conductor=N,
        unit={0: one},
        trace={0: CycScalar.from_rational(size, N)},
        metadata={"pauli_moduli": list(moduli)},
    )
    algebra.validate()
    logger.info(f"Built Pauli algebra {algebra.name} (dim {algebra.dim})")
    return algebra, T, beta


def pauli_matrix_algebra(moduli: Sequence[int]) -> Tuple[StructAlgebra, AbGroup, Bicharacter]:
    """
    The graded division algebra M_l(F) with basis X_t, t in T.

    Args:
        moduli: (l_1, ..., l_r), each at least 2; may be empty

    Returns:
        (algebra, T, beta) with X_u X_v = beta(u, v) X_v X_u

    Raises:
        BoundExceededError: If prod l_i exceeds the ``pauli_degree`` bound

    Examples:
        >>> D, T, beta = pauli_matrix_algebra((2,))
        >>> D.dim
        4
    """
    moduli = tuple(int(m) for m in moduli)
    bound = get_settings().bounds.pauli_degree
    _check_degree(f"Pauli algebra {moduli}", math.prod(moduli), "pauli_degree", bound)
    return _pauli_cached(moduli)


def mdk_label(i: int, j: int, t: Sequence[int]) -> str:
    return f"E{i}{j}*{pauli_label(t)}"


@lru_cache(maxsize=None)
def _mdk_cached(moduli: Tuple[int, ...], k: int) -> StructAlgebra:
    D, T, _ = _pauli_cached(moduli)
    N = D.conductor
    elements: List[Coords] = list(T.element_coords())
    n = len(elements)
    labels = [
        mdk_label(i, j, t) for i in range(1, k + 1) for j in range(1, k + 1) for t in elements
    ]

    def idx(i: int, j: int, t: int) -> int:
        return ((i - 1) * k + (j - 1)) * n + t

    table: Dict[Tuple[int, int], SparseVec] = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            for m in range(1, k + 1):
                for s in range(n):
                    for t in range(n):
                        prod = D.basis_product(s, t)
                        table[(idx(i, j, s), idx(j, m, t))] = {
                            idx(i, m, u): c for u, c in prod.items()
                        }
    one = CycScalar.one(N)
    size = math.prod(moduli)
    algebra = StructAlgebra(
        f"{D.name}_k{k}",
        labels,
        table,
        conductor=N,
        unit={idx(i, i, 0): one for i in range(1, k + 1)},
        trace={idx(i, i, 0): CycScalar.from_rational(size, N) for i in range(1, k + 1)},
        metadata={"pauli_moduli": list(moduli), "k": k},
    )
    algebra.validate()
    logger.info(f"Built matrix algebra {algebra.name} (dim {algebra.dim})")
    return algebra


def matrix_algebra_MDk(moduli: Sequence[int], k: int) -> StructAlgebra:
    """
    M_k(D) = M_k(F) (x) D on the basis E_ij (x) X_t, ordered by (i, j, t).

    (E_ij (x) X_s)(E_jm (x) X_t) = E_im (x) X_s X_t and products with mismatched
    inner indices vanish.

    Args:
        moduli: Pauli moduli of D
        k: Matrix size over D, at least 1

    Raises:
        BoundExceededError: If k * prod l_i exceeds the ``matrix_degree`` bound
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    moduli = tuple(int(m) for m in moduli)
    bounds = get_settings().bounds
    _check_degree(f"Pauli algebra {moduli}", math.prod(moduli), "pauli_degree", bounds.pauli_degree)
    _check_degree(f"M_{k}(D{moduli})", k * math.prod(moduli), "matrix_degree", bounds.matrix_degree)
    return _mdk_cached(moduli, k)


def pauli_index(T: AbGroup, t: Sequence[int]) -> int:
    """Position of X_t in the basis (lexicographic order of T)."""
    index = 0
    for c, m in zip(T.normalize(t), T.moduli):
        index = index * m + c
    return index
