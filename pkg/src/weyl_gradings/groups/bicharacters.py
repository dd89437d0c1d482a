"""
Alternating bicharacters on finite abelian groups and their isometry groups.

A bicharacter beta: T x T -> F^x with values in the N-th roots of unity is
stored as an integer exponent table on generator pairs, so that
beta(u, v) = zeta_N^(u^T E v). All inner loops work on these exponents; field
scalars are produced only on request.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..config import get_settings
from ..core.scalars import CycScalar, root_of_unity
from ..exceptions import (
    BoundExceededError,
    DegenerateBicharacterError,
    GroupError,
    SymplecticFormError,
)
from .abelian import AbElem, AbGroup, AbHom, Coords, enumerate_automorphisms

logger = logging.getLogger(__name__)

# chunk size of the vectorised criterion enumeration
_CHUNK = 65536


@dataclass(frozen=True)
class Bicharacter:
    """
    Bicharacter beta(u, v) = zeta_N^(u^T E v) on a finite abelian group.

    Attributes:
        group: The finite group T
        exponent: N, so that all values are N-th roots of unity
        table: Integer matrix E with E[i][j] the exponent of beta(g_i, g_j)
    """

    group: AbGroup
    exponent: int
    table: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.group.is_finite:
            raise GroupError(f"Bicharacters need a finite group, got {self.group}")
        n = self.exponent
        table = tuple(tuple(int(x) % n for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        for i, m in enumerate(self.group.moduli):
            for j in range(self.group.rank):
                if (m * table[i][j]) % n or (m * table[j][i]) % n:
                    raise GroupError(
                        f"Exponent table is not well defined on generator {i} of order {m}"
                    )

    def exp(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Exponent k with beta(u, v) = zeta_N^k, reduced mod N."""
        total = 0
        for i, ui in enumerate(u):
            if ui:
                row = self.table[i]
                total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj)
        return total % self.exponent

    def value(
        self, u: Sequence[int], v: Sequence[int], conductor: Optional[int] = None
    ) -> CycScalar:
        """
        beta(u, v) as a field element.

        Args:
            u: Coordinates of the first argument
            v: Coordinates of the second argument
            conductor: Field conductor, a multiple of the exponent (defaults to the exponent)

        Returns:
            Root of unity
        """
        conductor = conductor or self.exponent
        if conductor % self.exponent:
            raise GroupError(f"Q(zeta_{conductor}) does not contain the values of {self}")
        return root_of_unity(conductor, self.exp(u, v) * (conductor // self.exponent))

    def value_order(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Multiplicative order of beta(u, v)."""
        k = self.exp(u, v)
        return self.exponent // math.gcd(self.exponent, k)

    def is_alternating(self) -> bool:
        return all(self.exp(t, t) == 0 for t in self.group.element_coords())

    def radical(self) -> List[Coords]:
        """Elements pairing trivially with every generator."""
        gens = [g.coords for g in self.group.generators()]
        return [u for u in self.group.element_coords() if all(self.exp(u, g) == 0 for g in gens)]

    def is_nondegenerate(self) -> bool:
        return len(self.radical()) == 1

    def is_preserved_by(self, mu: AbHom) -> bool:
        """True if beta(mu g_i, mu g_j) = beta(g_i, g_j) on all generator pairs."""
        images = [mu.apply(g.coords) for g in self.group.generators()]
        n = self.group.rank
        return all(
            self.exp(images[i], images[j]) == self.table[i][j] for i in range(n) for j in range(n)
        )

    def __repr__(self) -> str:
        return f"Bicharacter({self.group}, N={self.exponent})"


def standard_bicharacter(moduli: Sequence[int]) -> Tuple[AbGroup, Bicharacter]:
    """
    The standard nondegenerate alternating bicharacter on prod (Z_l)^2.

    Generators are ordered a_1, b_1, ..., a_r, b_r, with beta(a_i, b_i) a
    primitive l_i-th root of unity and all other generator pairs orthogonal.

    Args:
        moduli: (l_1, ..., l_r), each at least 2

    Returns:
        (T, beta)

    Examples:
        >>> T, beta = standard_bicharacter((2,))
        >>> beta.value((1, 0), (0, 1)) == -1
        True
    """
    if any(m < 2 for m in moduli):
        raise GroupError(f"Pauli moduli must be >= 2, got {tuple(moduli)}")
    pair_moduli = tuple(m for m in moduli for _ in range(2))
    group = AbGroup(0, pair_moduli, name="T")
    n = math.lcm(*moduli) if moduli else 1
    rank = len(pair_moduli)
    table = [[0] * rank for _ in range(rank)]
    for i, m in enumerate(moduli):
        table[2 * i][2 * i + 1] = n // m
        table[2 * i + 1][2 * i] = -(n // m)
    return group, Bicharacter(group, n, tuple(tuple(row) for row in table))


def _check_bicharacter_bound(group: AbGroup, bound: Optional[int]) -> int:
    if bound is None:
        bound = get_settings().bounds.bicharacter_group_order
    order = group.order or 1
    if order > bound:
        raise BoundExceededError(
            f"Group {group} has order {order}, above the bicharacter bound {bound}",
            bound_name="bicharacter_group_order",
            bound=bound,
        )
    return bound


def aut_bicharacter_bruteforce(
    group: AbGroup, beta: Bicharacter, bound: Optional[int] = None
) -> List[AbHom]:
    """
    Aut(T, beta) by pruned enumeration of Aut(T).

    Generator images are rejected as soon as they break beta on an already
    assigned pair, so the search never materializes all of Aut(T).

    Args:
        group: Finite group T
        beta: Bicharacter on T
        bound: Maximum |T| (defaults to the configured bicharacter bound)

    Returns:
        Automorphisms preserving beta, in canonical order

    Raises:
        BoundExceededError: If |T| exceeds the bound
    """
    bound = _check_bicharacter_bound(group, bound)

    def preserves(i: int, j: int, x: Coords, y: Coords) -> bool:
        return beta.exp(x, y) == beta.table[i][j] and beta.exp(y, x) == beta.table[j][i]

    result = enumerate_automorphisms(group, bound=bound, pair_constraint=preserves)
    logger.info(f"|Aut({group}, beta)| = {len(result)} by brute force")
    return result


def symplectic_basis(group: AbGroup, beta: Bicharacter) -> List[AbElem]:
    """
    Greedy symplectic basis (a_1, b_1, ..., a_r, b_r) of (T, beta).

    At each step a is an element of maximal order in the current orthogonal
    complement and b the first element with beta(a, b) of the same order; the
    complement of <a, b> is taken next.

    Args:
        group: Finite group T
        beta: Alternating bicharacter on T

    Returns:
        Basis elements in pair order

    Raises:
        DegenerateBicharacterError: If beta has a nontrivial radical
        BoundExceededError: If |T| exceeds the bicharacter bound
    """
    _check_bicharacter_bound(group, None)
    radical = [u for u in beta.radical() if any(u)]
    if radical:
        raise DegenerateBicharacterError(
            f"Bicharacter on {group} is degenerate; {radical[0]} is in the radical",
            radical=group.element(radical[0]),
        )

    remaining = list(group.element_coords())
    basis: List[AbElem] = []
    while len(remaining) > 1:
        a = max(remaining, key=lambda x: (group.coords_order(x) or 0, [-c for c in x]))
        order_a = group.coords_order(a)
        b = next((y for y in remaining if beta.value_order(a, y) == order_a), None)
        if b is None:
            raise DegenerateBicharacterError(
                f"No partner for {a} in its orthogonal complement", radical=group.element(a)
            )
        basis.extend([group.element(a), group.element(b)])
        remaining = [w for w in remaining if beta.exp(w, a) == 0 and beta.exp(w, b) == 0]
        logger.debug(f"Symplectic pair {a}, {b} of order {order_a}; {len(remaining)} left")
    return basis


# ── Matrix criterion ─────────────────────────────────────────────────


class CriterionResult(NamedTuple):
    """Membership test and group order from the matrix criterion."""

    accepts: Callable[[Sequence[Sequence[int]]], bool]
    order: int


def _symplectic_blocks(group: AbGroup, beta: Bicharacter) -> Tuple[int, List[int]]:
    moduli = group.moduli
    if group.free_rank or not moduli or len(moduli) % 2:
        raise SymplecticFormError(f"{group} is not a sum of squares of cyclic groups")
    pairs = [moduli[2 * i] for i in range(len(moduli) // 2)]
    if any(moduli[2 * i + 1] != p for i, p in enumerate(pairs)):
        raise SymplecticFormError(f"{group} is not presented in symplectic pairs")
    factored = [sympy.factorint(p) for p in pairs]
    primes = {q for f in factored for q in f}
    if len(primes) != 1:
        raise SymplecticFormError(f"{group} is not a q-group")
    q = primes.pop()
    exponents = [f[q] for f in factored]
    if exponents != sorted(exponents):
        raise SymplecticFormError(f"Symplectic blocks of {group} are not in ascending order")
    _, standard = standard_bicharacter(pairs)
    if standard.exponent != beta.exponent or standard.table != beta.table:
        raise SymplecticFormError("Bicharacter is not the standard form on this presentation")
    return q, exponents


def aut_bicharacter_matrix_criterion(group: AbGroup, beta: Bicharacter) -> CriterionResult:
    """
    Aut(T, beta) for a q-group in symplectic form, via its matrix description.

    T = prod (Z_{q^alpha_i})^2 with alpha ascending. Aut(T, beta) is the set of
    integer matrices A whose row block i is taken modulo q^alpha_i, whose
    blocks below the diagonal satisfy A_ij = 0 (mod q^(alpha_i - alpha_j)),
    and with A^T J A = J (mod q^alpha_f), J the direct sum of
    q^(alpha_f - alpha_i) [[0, 1], [-1, 0]].

    Args:
        group: T in symplectic form
        beta: The standard bicharacter on that presentation

    Returns:
        CriterionResult with a predicate on integer matrices and the exact order

    Raises:
        SymplecticFormError: If T is not a q-group in symplectic form

    Examples:
        >>> T, beta = standard_bicharacter((4,))
        >>> aut_bicharacter_matrix_criterion(T, beta).order
        48
    """
    q, exponents = _symplectic_blocks(group, beta)
    top = max(exponents)
    modulus = q**top
    n = group.rank
    alphas = [exponents[i // 2] for i in range(n)]
    j_form = np.array(beta.table, dtype=np.int64)

    # entry (r, c) ranges over multiples of step[r][c] below q^alpha_r
    steps = [[q ** max(0, alphas[r] - alphas[c]) for c in range(n)] for r in range(n)]
    radices = [[q ** alphas[r] // steps[r][c] for c in range(n)] for r in range(n)]

    def accepts(matrix: Sequence[Sequence[int]]) -> bool:
        a = np.array(matrix, dtype=np.int64).reshape(n, n)
        for r in range(n):
            for c in range(n):
                if a[r, c] % steps[r][c]:
                    return False
        form = a.T @ j_form @ a
        return bool(np.all((form - j_form) % modulus == 0))

    flat_radix = np.array([radices[r][c] for r in range(n) for c in range(n)], dtype=np.int64)
    flat_step = np.array([steps[r][c] for r in range(n) for c in range(n)], dtype=np.int64)
    total = int(np.prod(flat_radix))
    strides = np.ones(n * n, dtype=np.int64)
    for k in range(n * n - 2, -1, -1):
        strides[k] = strides[k + 1] * flat_radix[k + 1]

    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // strides[None, :]) % flat_radix[None, :]
        batch = (digits * flat_step[None, :]).reshape(-1, n, n)
        forms = np.einsum("bki,kl,blj->bij", batch, j_form, batch)
        ok = np.all(((forms - j_form[None, :, :]) % modulus) == 0, axis=(1, 2))
        count += int(np.count_nonzero(ok))
    logger.info(f"|Aut({group}, beta)| = {count} by the matrix criterion ({total} matrices)")
    return CriterionResult(accepts, count)
