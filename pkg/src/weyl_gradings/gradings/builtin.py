"""
The fine gradings of the octonions, the Albert algebra and matrix algebras.

Each constructor returns a validated Grading on an adapted basis. Gradings
whose components are not spanned by the construction basis (the Z x Z_2^3 and
Z_3^3 gradings of the Albert algebra) live on rebased algebras.
"""

import logging
from functools import lru_cache
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..algebras.albert import albert_algebra, albert_nu_basis, tilde_iota
from ..algebras.base import StructAlgebra
from ..algebras.cayley import (
    cayley_cd_basis,
    cayley_good_basis,
    derive_okubo_degrees,
    okubo_algebra,
)
from ..algebras.pauli import matrix_algebra_MDk
from ..core.linalg import SparseVec
from ..core.scalars import DEFAULT_CONDUCTOR, CycScalar, root_of_unity
from ..exceptions import UnknownObjectError
from ..groups.abelian import AbGroup, Coords
from ..groups.bicharacters import standard_bicharacter
from .base import Grading

logger = logging.getLogger(__name__)

Z2_3 = (2, 2, 2)

# Cartan degrees of u1, u2, u3 in Z^2; v_i has the opposite degree.
_EPS = {1: (1, 0), 2: (0, 1), 3: (-1, -1)}

# Albert Cartan generators in Z^4.
_A = {1: (1, 0, 0, 0), 2: (0, 1, 0, 0), 3: (-1, -1, 0, 0)}
_G = {1: (0, 0, 1, 0), 2: (0, 0, 0, 1), 3: (0, 0, -1, -1)}


def _add(*vs: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(c) for c in zip(*vs))


def _neg(v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-c for c in v)


def _next(i: int, k: int = 1) -> int:
    return (i - 1 + k) % 3 + 1


# ── Octonions ────────────────────────────────────────────────────────


def cartan_cayley() -> Grading:
    """Cartan Z^2-grading: e_i in degree 0, deg u_i = eps_i = -deg v_i."""
    C = cayley_good_basis()
    degree: Dict[str, Tuple[int, ...]] = {"e1": (0, 0), "e2": (0, 0)}
    for i, eps in _EPS.items():
        degree[f"u{i}"] = eps
        degree[f"v{i}"] = _neg(eps)
    return Grading(C, AbGroup(2), [degree[b] for b in C.labels], name="cartan_cayley")


def cd_cayley() -> Grading:
    """Z_2^3-grading of the CD octonions with deg w_i = c_i."""
    C = cayley_cd_basis()
    return Grading(C, AbGroup(0, Z2_3), C.metadata["cd_degrees"], name="cd_cayley")


def okubo_z32() -> Grading:
    """Z_3^2 division grading of the Okubo algebra seeded by deg e1 = (1,0), deg u1 = (0,1)."""
    O = okubo_algebra()
    degrees = derive_okubo_degrees(O)
    return Grading(O, AbGroup(0, (3, 3)), [degrees[b] for b in O.labels], name="okubo_z32")


# ── Matrix algebras ──────────────────────────────────────────────────


def gamma_M(moduli: Sequence[int], k: int) -> Grading:
    """
    Fine grading of M_k(D) by Z^{k-1} x T with deg(E_ij (x) X_t) = (e_i - e_j, t).

    The free part is Z^k_0 = {x in Z^k : sum x = 0}, written in its first k - 1
    coordinates.
    """
    moduli = tuple(int(m) for m in moduli)
    M = matrix_algebra_MDk(moduli, k)
    T, _ = standard_bicharacter(moduli)
    group = AbGroup(k - 1, T.moduli)
    elements = list(T.element_coords())
    degrees = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            x = [0] * k
            x[i - 1] += 1
            x[j - 1] -= 1
            for t in elements:
                degrees.append(tuple(x[: k - 1]) + t)
    name = "gamma_M_" + "x".join(str(m) for m in moduli) + f"_k{k}"
    return Grading(M, group, degrees, name=name, metadata={"pauli_moduli": list(moduli), "k": k})


# ── Albert algebra ───────────────────────────────────────────────────


def albert_cartan_degree(i: int, label: str) -> Tuple[int, ...]:
    """Z^4-degree of iota_i(label) for a good-basis label."""
    kind, n = label[0], int(label[1])
    if kind == "e":
        return _A[i] if n == 1 else _neg(_A[i])
    if n == i:
        deg = _G[i]
    elif n == _next(i, 1):
        deg = _add(_A[_next(i, 2)], _G[_next(i, 1)])
    else:
        deg = _add(_neg(_A[_next(i, 1)]), _G[_next(i, 2)])
    return deg if kind == "u" else _neg(deg)


def albert_cartan() -> Grading:
    """Cartan Z^4-grading of the Albert algebra over the good basis."""
    A = albert_algebra(cayley_good_basis())
    C = cayley_good_basis()
    degrees = [(0, 0, 0, 0)] * 3
    for i in (1, 2, 3):
        degrees += [albert_cartan_degree(i, b) for b in C.labels]
    return Grading(A, AbGroup(4), degrees, name="albert_cartan")


def albert_z25() -> Grading:
    """
    Z_2^5-grading: coordinates (a, b, c1, c2, c3) with
    deg iota_1(x) = a + deg x, deg iota_2(x) = b + deg x, deg iota_3(x) = a + b + deg x.
    """
    C = cayley_cd_basis()
    A = albert_algebra(C)
    heads = {1: (1, 0), 2: (0, 1), 3: (1, 1)}
    degrees: List[Tuple[int, ...]] = [(0,) * 5] * 3
    for i in (1, 2, 3):
        degrees += [heads[i] + tuple(d) for d in C.metadata["cd_degrees"]]
    return Grading(A, AbGroup(0, (2,) * 5), degrees, name="albert_z25")


def albert_zz23() -> Grading:
    """
    Z x Z_2^3-grading on the nu-basis: deg S+- = (+-2, 0), deg nu+-(x) = (+-1, deg x),
    deg nu(a) = (0, deg a), E and Et in degree 0.
    """
    N = albert_nu_basis()
    C = cayley_cd_basis()
    cd = {label: tuple(d) for label, d in zip(C.labels, C.metadata["cd_degrees"])}
    degrees = []
    for label in N.labels:
        if label in ("E", "Et"):
            degrees.append((0, 0, 0, 0))
        elif label in ("S+", "S-"):
            degrees.append((2 if label == "S+" else -2, 0, 0, 0))
        else:
            head, arg = label.split("(", 1)
            x = arg[:-1]
            z = {"nu": 0, "nu+": 1, "nu-": -1}[head]
            degrees.append((z,) + cd[x])
    return Grading(N, AbGroup(1, Z2_3), degrees, name="albert_zz23")


def z33_labels(C: StructAlgebra) -> List[str]:
    labels = [f"Z{k}" for k in range(3)]
    labels += [f"Y{k}({x})" for k in range(3) for x in C.labels]
    return labels


@lru_cache(maxsize=None)
def z33_basis(conductor: int = DEFAULT_CONDUCTOR) -> StructAlgebra:
    """
    The Albert algebra rebased to the simultaneous eigenbasis of phi_1, phi_2, phi_3.

    Z_k = sum_i omega^{-ki} E_i and Y_k(x) = 1/2 sum_i omega^{-ki} tilde_iota_i(x) for
    x in the Okubo basis; every one of these 27 elements has cube 1.
    """
    C = cayley_good_basis(conductor)
    A = albert_algebra(C)
    half = CycScalar.from_rational(1, conductor) / 2
    columns: List[SparseVec] = []
    for k in range(3):
        z = A.zero()
        for i in (1, 2, 3):
            z = z + A.basis(f"E{i}") * root_of_unity(conductor, -k * i * conductor // 3)
        columns.append(z.vec)
    for k in range(3):
        for x in C.labels:
            y = A.zero()
            for i in (1, 2, 3):
                twist = root_of_unity(conductor, -k * i * conductor // 3)
                y = y + tilde_iota(A, i, C.basis(x)) * twist
            columns.append((y * half).vec)
    return A.rebase(columns, z33_labels(C), "albert_z33_basis")


def _z33_degrees(swap: bool) -> List[Coords]:
    okubo = derive_okubo_degrees()
    C = cayley_good_basis()
    degrees: List[Coords] = [(0, 0, k) for k in range(3)]
    for k in range(3):
        for x in C.labels:
            a, b = okubo[x]
            degrees.append((b, a, k) if swap else (a, b, k))
    return degrees


def albert_z33() -> Grading:
    """The Z_3^3-grading (Gamma+) with all 27 components one-dimensional."""
    return Grading(z33_basis(), AbGroup(0, (3, 3, 3)), _z33_degrees(False), name="albert_z33")


def albert_z33_minus() -> Grading:
    """Gamma-: the Z_3^3-grading with the first two degree coordinates exchanged."""
    return Grading(
        z33_basis(), AbGroup(0, (3, 3, 3)), _z33_degrees(True), name="albert_z33_minus"
    )


# ── Registry ─────────────────────────────────────────────────────────

_BUILDERS: Dict[str, Callable[..., Grading]] = {
    "cartan_cayley": cartan_cayley,
    "cd_cayley": cd_cayley,
    "okubo_z32": okubo_z32,
    "gamma_M": gamma_M,
    "albert_cartan": albert_cartan,
    "albert_z25": albert_z25,
    "albert_zz23": albert_zz23,
    "albert_z33": albert_z33,
    "albert_z33_minus": albert_z33_minus,
}

GRADING_NAMES: Tuple[str, ...] = tuple(_BUILDERS)

# Universal groups as (free rank, torsion moduli in normal form); gamma_M depends on params.
DECLARED_UNIVERSAL: Dict[str, Tuple[int, Tuple[int, ...]]] = {
    "cartan_cayley": (2, ()),
    "cd_cayley": (0, (2, 2, 2)),
    "okubo_z32": (0, (3, 3)),
    "albert_cartan": (4, ()),
    "albert_z25": (0, (2, 2, 2, 2, 2)),
    "albert_zz23": (1, (2, 2, 2)),
    "albert_z33": (0, (3, 3, 3)),
    "albert_z33_minus": (0, (3, 3, 3)),
}


_cache: Dict[Tuple[str, Tuple[Tuple[str, Any], ...]], Grading] = {}


def builtin_grading(name: str, **params: Any) -> Grading:
    """
    Look up a builtin grading by name.

    Args:
        name: One of GRADING_NAMES
        **params: ``moduli`` and ``k`` for gamma_M

    Returns:
        Validated Grading (cached per name and params)

    Raises:
        UnknownObjectError: For an unknown name or missing parameters

    Examples:
        >>> str(builtin_grading("gamma_M", moduli=(2,), k=2).group)
        'Z x Z_2^2'
    """
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownObjectError(f"Unknown grading {name!r}; known: {', '.join(GRADING_NAMES)}")
    frozen = ((k, tuple(v) if isinstance(v, list) else v) for k, v in params.items())
    key = (name, tuple(sorted(frozen)))
    if key in _cache:
        return _cache[key]
    try:
        grading = builder(**params)
    except TypeError as e:
        raise UnknownObjectError(f"Bad parameters for grading {name}: {str(e)}") from e
    logger.info(f"Built grading {grading.name} over {grading.group}")
    _cache[key] = grading
    return grading


def declared_universal(grading: Grading) -> Tuple[int, Tuple[int, ...]]:
    """Normal form of the universal group the construction is known to have."""
    if grading.name.startswith("gamma_M"):
        k = int(grading.metadata["k"])
        T, _ = standard_bicharacter(grading.metadata["pauli_moduli"])
        return AbGroup(k - 1, T.moduli).normal_form()
    base = grading.name
    if base not in DECLARED_UNIVERSAL:
        raise UnknownObjectError(f"No declared universal group for {grading.name}")
    free, moduli = DECLARED_UNIVERSAL[base]
    return AbGroup(free, moduli).normal_form()


def z33_component_element(grading: Grading, degree: Sequence[int]) -> SparseVec:
    """The cube-one basis vector spanning the one-dimensional component of this degree."""
    (index,) = grading.component(degree)
    return {index: CycScalar.one(grading.algebra.conductor)}

