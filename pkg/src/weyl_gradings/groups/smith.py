"""
Smith normal form over the integers and the presentations built on it.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf(
    matrix: Sequence[Sequence[int]], ncols: int, track_left: bool = True
) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    a = [[int(x) for x in row] for row in matrix]
    m, n = len(a), ncols
    u = _identity(m) if track_left else []
    v = _identity(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        if track_left:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(target: int, source: int, q: int) -> None:
        # row_target += q * row_source
        if q:
            ra, rs = a[target], a[source]
            for k in range(n):
                ra[k] += q * rs[k]
            if track_left:
                ua, us = u[target], u[source]
                for k in range(m):
                    ua[k] += q * us[k]

    def add_col(target: int, source: int, q: int) -> None:
        if q:
            for row in a:
                row[target] += q * row[source]
            for row in v:
                row[target] += q * row[source]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])

        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        clean = False
            if not clean:
                candidates = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                candidates += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(candidates)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track_left:
                u[t] = [-x for x in u[t]]
        t += 1

    return a, u, v


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Smith normal form of an integer matrix.

    Args:
        matrix: Rectangular integer matrix (m x n)

    Returns:
        (D, U, V) with U @ matrix @ V == D, D diagonal with d_1 | d_2 | ..., and U, V
        unimodular

    Examples:
        >>> D, U, V = smith_normal_form([[2, 0], [0, 3]])
        >>> D.tolist()
        [[1, 0], [0, 6]]
    """
    rows = [list(r) for r in matrix]
    ncols = len(rows[0]) if rows else 0
    d, u, v = _snf(rows, ncols)
    return (
        np.array(d, dtype=object).reshape(len(rows), ncols),
        np.array(u, dtype=object).reshape(len(rows), len(rows)),
        np.array(v, dtype=object).reshape(ncols, ncols),
    )


def invariant_factors(
    num_generators: int, relations: Sequence[Sequence[int]]
) -> Tuple[List[int], IntMatrix]:
    """
    Diagonal of the SNF of a relation matrix together with the right transform.

    Args:
        num_generators: Number of columns
        relations: Relation rows

    Returns:
        (d, V) where d has length num_generators (0 for free directions)
    """
    rows = [list(r) for r in relations if any(r)]
    if not rows:
        return [0] * num_generators, _identity(num_generators)
    d, _, v = _snf(rows, num_generators, track_left=False)
    diag = [d[i][i] if i < len(d) else 0 for i in range(num_generators)]
    return diag, v


def solve_in_quotient(
    columns: Sequence[Sequence[int]], moduli: Sequence[int], free_rank: int, target: Sequence[int]
) -> Optional[List[int]]:
    """
    Integer coefficients x with sum_j x_j * columns[j] == target in Z^r x prod Z_{m_i}.

    Args:
        columns: Element coordinates (length free_rank + len(moduli)) of the generators
        moduli: Torsion moduli of the ambient group
        free_rank: Free rank of the ambient group
        target: Coordinates of the element to express

    Returns:
        Coefficient list, or None if target is not in the generated subgroup
    """
    rank = free_rank + len(moduli)
    gens = [list(c) for c in columns]
    # torsion relations appear as extra generators with coefficients we discard
    for i, m in enumerate(moduli):
        rel = [0] * rank
        rel[free_rank + i] = m
        gens.append(rel)
    if not gens:
        return [] if not any(target) else None
    matrix = [[gens[j][r] for j in range(len(gens))] for r in range(rank)]
    d, u, v = _snf(matrix, len(gens))
    w = [sum(u[i][k] * target[k] for k in range(rank)) for i in range(rank)]
    z = [0] * len(gens)
    for i in range(rank):
        di = d[i][i] if i < len(gens) else 0
        if di == 0:
            if w[i]:
                return None
        else:
            if w[i] % di:
                return None
            z[i] = w[i] // di
    x = [sum(v[j][i] * z[i] for i in range(len(gens))) for j in range(len(gens))]
    return x[: len(columns)]
