"""
Named automorphism families used as Weyl group generators, and the Z_3^3 realizability test.
"""

import logging
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebras.albert import albert_algebra, albert_nu_basis, block_map, frame
from ..algebras.base import AlgebraMap, AlgElement, StructAlgebra
from ..algebras.cayley import (
    cayley_cd_basis,
    cayley_good_basis,
    derive_okubo_degrees,
    tau_columns,
)
from ..core.linalg import SparseVec
from ..core.scalars import CycScalar, omega, root_of_unity
from ..exceptions import CertificationError, ConfigurationError, ScalarError, UnknownObjectError
from ..gradings.base import Grading
from ..gradings.builtin import builtin_grading, z33_basis
from ..groups.abelian import AbGroup, AbHom
from .base import AlgAutomorphism, automorphism_check
from .extension import NoExtension, extend_from_generators
from .spin import spin_beta_z25, spin_beta_zz23, spin_standard

logger = logging.getLogger(__name__)


def _next(i: int) -> int:
    return i % 3 + 1


def _relabel(C: StructAlgebra, images: Dict[str, Tuple[str, int]]) -> List[SparseVec]:
    """Columns of the signed basis permutation b -> sign * images[b]."""
    columns = []
    for label in C.labels:
        target, sign = images.get(label, (label, 1))
        columns.append({C.index(target): CycScalar.from_rational(sign, C.conductor)})
    return columns


# ── Octonions ────────────────────────────────────────────────────────


def tau_cayley() -> AlgAutomorphism:
    C = cayley_good_basis()
    return automorphism_check(C, tau_columns(C, 1), name="tau")


def phi1_cayley() -> AlgAutomorphism:
    """e1 <-> e2, u_i <-> v_i."""
    C = cayley_good_basis()
    images = {"e1": ("e2", 1), "e2": ("e1", 1)}
    for i in (1, 2, 3):
        images[f"u{i}"] = (f"v{i}", 1)
        images[f"v{i}"] = (f"u{i}", 1)
    return automorphism_check(C, _relabel(C, images), name="phi1")


def phi2_cayley() -> AlgAutomorphism:
    """e_i fixed, u1 -> -u1, v1 -> -v1, u2 <-> u3, v2 <-> v3."""
    C = cayley_good_basis()
    images = {
        "u1": ("u1", -1),
        "v1": ("v1", -1),
        "u2": ("u3", 1),
        "u3": ("u2", 1),
        "v2": ("v3", 1),
        "v3": ("v2", 1),
    }
    return automorphism_check(C, _relabel(C, images), name="phi2")


def octonion_aut_from_group_aut(mu: AbHom) -> AlgAutomorphism:
    """
    The automorphism of the CD octonions sending w_i to a homogeneous element of
    degree mu(c_i) with the same square.

    Raises:
        CertificationError: If the assignment does not extend
    """
    C = cayley_cd_basis()
    degrees = [tuple(d) for d in C.metadata["cd_degrees"]]
    one = C.one()
    generators = [C.basis(w) for w in C.metadata["cd_generators"]]
    images = []
    for w, c in zip(generators, (g.coords for g in mu.source.generators())):
        b = C.basis(degrees.index(mu.apply(c)))
        ratio = (w * w).is_multiple_of(one) / (b * b).is_multiple_of(one)
        images.append(b * ratio.nth_root(2))
    result = extend_from_generators(C, generators, images, name=f"phi{list(mu.key())}")
    if isinstance(result, NoExtension):
        raise CertificationError(f"{mu} does not lift to the octonions: {result.reason}")
    return result


# ── Albert algebra ───────────────────────────────────────────────────


def _identity(x: AlgElement) -> AlgElement:
    return x


def _conj(x: AlgElement) -> AlgElement:
    return x.conj()


def psi_123(C: Optional[StructAlgebra] = None) -> AlgAutomorphism:
    """E_i -> E_{i+1}, iota_i(x) -> iota_{i+1}(x)."""
    C = C or cayley_good_basis()
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    columns = block_map(
        A,
        C,
        {i: frame(A, _next(i)) for i in (1, 2, 3)},
        {i: (_next(i), _identity, one) for i in (1, 2, 3)},
    )
    return automorphism_check(A, columns, name="psi_123")


def psi_23(C: Optional[StructAlgebra] = None) -> AlgAutomorphism:
    """E_1 fixed, E_2 <-> E_3, iota_1(x) -> iota_1(conj x), iota_2(x) <-> iota_3(conj x)."""
    C = C or cayley_good_basis()
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    columns = block_map(
        A,
        C,
        {1: frame(A, 1), 2: frame(A, 3), 3: frame(A, 2)},
        {1: (1, _conj, one), 2: (3, _conj, one), 3: (2, _conj, one)},
    )
    return automorphism_check(A, columns, name="psi_23")


def psi_12(C: Optional[StructAlgebra] = None) -> AlgAutomorphism:
    """E_3 fixed, E_1 <-> E_2, iota_3(x) -> iota_3(conj x), iota_1(x) <-> iota_2(conj x)."""
    C = C or cayley_good_basis()
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    columns = block_map(
        A,
        C,
        {1: frame(A, 2), 2: frame(A, 1), 3: frame(A, 3)},
        {1: (2, _conj, one), 2: (1, _conj, one), 3: (3, _conj, one)},
    )
    return automorphism_check(A, columns, name="psi_12")


def phi_extension_albert(phi: AlgAutomorphism, name: Optional[str] = None) -> AlgAutomorphism:
    """Fixes E_i and takes iota_i(x) to iota_i(phi(x))."""
    C = phi.algebra
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    columns = block_map(
        A,
        C,
        {i: frame(A, i) for i in (1, 2, 3)},
        {i: (i, phi, one) for i in (1, 2, 3)},
    )
    return automorphism_check(A, columns, name=name or f"ext({phi.name})")


def tau_albert() -> AlgAutomorphism:
    return phi_extension_albert(tau_cayley(), name="tau_albert")


def psi0_zz23() -> AlgAutomorphism:
    """
    diag(1, -1, 1, -1) on (E, iota_1, iota_2, iota_3), seen on the nu-basis:
    S+- -> S-+, nu+-(x) -> nu-+(x), nu(a) -> -nu(a).
    """
    C = cayley_cd_basis()
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    columns = block_map(
        A,
        C,
        {i: frame(A, i) for i in (1, 2, 3)},
        {1: (1, _identity, -one), 2: (2, _identity, one), 3: (3, _identity, -one)},
    )
    N = albert_nu_basis()
    diag = AlgAutomorphism(A, columns, name="psi0_zz23")
    return automorphism_check(N, diag.transport(N).columns, name="psi0_zz23")


def phi_extension_zz23(phi: AlgAutomorphism) -> AlgAutomorphism:
    """The extension of an automorphism of the CD octonions, on the nu-basis."""
    ext = phi_extension_albert(phi)
    N = albert_nu_basis()
    return automorphism_check(N, ext.transport(N).columns, name=ext.name)


# ── Z_3^3 grading ────────────────────────────────────────────────────


def okubo_phi(j: int) -> AlgebraMap:
    """x -> omega^{k_j} x on the Okubo basis, k the Z_3^2 degree of x (j = 1, 2)."""
    C = cayley_good_basis()
    degrees = derive_okubo_degrees()
    columns = []
    for label in C.labels:
        k = degrees[label][j - 1]
        columns.append({C.index(label): root_of_unity(C.conductor, k * C.conductor // 3)})
    return AlgebraMap(C, C, columns)


def z33_phi(j: int) -> AlgAutomorphism:
    """
    phi_1, phi_2, phi_3 of the Z_3^3 grading, built on the good-basis Albert algebra
    and moved to the eigenbasis.

    phi_j (j = 1, 2) fixes E_i and sends tilde_iota_i(x) to tilde_iota_i(phi_j x);
    phi_3 sends E_i to E_{i+1} and tilde_iota_i(x) to tilde_iota_{i+1}(x).
    """
    if j not in (1, 2, 3):
        raise UnknownObjectError(f"z33_phi needs j in (1, 2, 3), got {j}")
    C = cayley_good_basis()
    A = albert_algebra(C)
    one = CycScalar.one(A.conductor)
    tau = [AlgebraMap(C, C, tau_columns(C, p)) for p in range(3)]
    if j == 3:
        frames = {i: frame(A, _next(i)) for i in (1, 2, 3)}
        blocks: Dict[int, Tuple[int, Callable[[AlgElement], AlgElement], CycScalar]] = {
            i: (_next(i), tau[1], one) for i in (1, 2, 3)
        }
    else:
        phi = okubo_phi(j)
        frames = {i: frame(A, i) for i in (1, 2, 3)}

        def twisted(i: int) -> Callable[[AlgElement], AlgElement]:
            return lambda y: tau[i % 3](phi(tau[(-i) % 3](y)))

        blocks = {i: (i, twisted(i), one) for i in (1, 2, 3)}
    columns = block_map(A, C, frames, blocks)
    parent = automorphism_check(A, columns, name=f"z33_phi{j}")
    basis = z33_basis()
    return automorphism_check(basis, parent.transport(basis).columns, name=f"z33_phi{j}")


class Incomparable(NamedTuple):
    reason: str


def associativity_defect(
    x1: AlgElement, x2: AlgElement, x3: AlgElement
) -> Union[CycScalar, Incomparable]:
    """
    lambda with (x1 x2) x3 = lambda x1 (x2 x3).

    Examples:
        >>> X = z33_standard_triple(builtin_grading("albert_z33"))
        >>> associativity_defect(*X) == omega()
        True
    """
    rhs = x1 * (x2 * x3)
    if rhs.is_zero:
        return Incomparable("right side vanishes")
    lam = ((x1 * x2) * x3).is_multiple_of(rhs)
    if lam is None:
        return Incomparable("not proportional")
    return lam


def cube_normalize(x: AlgElement) -> AlgElement:
    """
    x / c^{1/3} where x^3 = c 1.

    Raises:
        ConfigurationError: If x^3 is not a multiple of 1 or c has no cube root
            in the working field
    """
    c = (x * (x * x)).is_multiple_of(x.owner.one())
    if c is None or c.is_zero:
        raise ConfigurationError(f"{x} does not cube to a nonzero scalar")
    try:
        return x * c.cube_root().inverse()
    except ScalarError as e:
        raise ConfigurationError(f"Cube of {x} has no cube root: {str(e)}") from e


def z33_standard_triple(grading: Grading) -> Tuple[AlgElement, AlgElement, AlgElement]:
    """Cube-one elements of the components g_1, g_2, g_3 (standard generators)."""
    A = grading.algebra
    out = []
    for g in grading.group.generators():
        (index,) = grading.component(g.coords)
        out.append(cube_normalize(A.basis(index)))
    return out[0], out[1], out[2]


def z33_isomorphism_obstruction() -> Tuple[Union[CycScalar, Incomparable], ...]:
    """Associativity defects of the standard triples of Gamma+ and Gamma-."""
    return tuple(
        associativity_defect(*z33_standard_triple(builtin_grading(name)))
        for name in ("albert_z33", "albert_z33_minus")
    )


class NotRealizable(NamedTuple):
    key: Tuple[int, ...]
    reason: str


def realize_z33(
    grading: Grading, mu: AbHom, scales: Optional[Sequence[int]] = None
) -> Union[AlgAutomorphism, NotRealizable]:
    """
    Try to realize mu in Aut(Z_3^3) by an automorphism permuting the components.

    The standard generators X_j are sent to the cube-one basis elements of the
    components mu(g_j), optionally multiplied by omega^{scales[j]}.

    Args:
        grading: albert_z33 (or albert_z33_minus)
        mu: Automorphism of the grading group
        scales: Exponents of omega applied to the images

    Returns:
        The automorphism, or NotRealizable
    """
    A = grading.algebra
    w = omega(A.conductor)
    scales = list(scales or [0, 0, 0])
    generators = list(z33_standard_triple(grading))
    images = []
    for g, s in zip(grading.group.generators(), scales):
        (index,) = grading.component(mu.apply(g.coords))
        images.append(cube_normalize(A.basis(index)) * (w**s))
    result = extend_from_generators(A, generators, images, name=f"realize{list(mu.key())}")
    if isinstance(result, NoExtension):
        return NotRealizable(mu.key(), result.reason)
    return result


def hom_from_key(group: AbGroup, key: Sequence[int]) -> AbHom:
    """Inverse of AbHom.key() for endomorphisms of ``group``."""
    n = group.rank
    matrix = np.array(key, dtype=np.int64).reshape(n, n).T
    return AbHom(group, group, matrix, check=False)


def realizable_key(args: Tuple[str, Tuple[int, ...]]) -> Tuple[Tuple[int, ...], bool]:
    """Worker entry point: (grading name, mu key) -> (key, realizable)."""
    name, key = args
    grading = builtin_grading(name)
    mu = hom_from_key(grading.group, key)
    return key, isinstance(realize_z33(grading, mu), AlgAutomorphism)


# ── Registry ─────────────────────────────────────────────────────────


_BUILDERS: Dict[str, Callable[..., AlgAutomorphism]] = {
    "tau": tau_cayley,
    "phi1_cayley": phi1_cayley,
    "phi2_cayley": phi2_cayley,
    "psi_123": psi_123,
    "psi_23": psi_23,
    "psi_12": psi_12,
    "tau_albert": tau_albert,
    "spin_standard": spin_standard,
    "psi0_zz23": psi0_zz23,
    "spin_beta_z25": spin_beta_z25,
    "spin_beta_zz23": spin_beta_zz23,
    "z33_phi": z33_phi,
    "phi_extension_albert": phi_extension_albert,
    "phi_extension_zz23": phi_extension_zz23,
    "octonion_from_group": octonion_aut_from_group_aut,
}

AUTOMORPHISM_NAMES: Tuple[str, ...] = tuple(_BUILDERS)


def builtin_automorphism(name: str, **params: Any) -> AlgAutomorphism:
    """
    Look up a named automorphism family.

    Args:
        name: One of AUTOMORPHISM_NAMES
        **params: ``h`` for the spin families, ``j`` for z33_phi, ``phi`` for the
            extensions, ``mu`` for octonion_from_group, ``C`` for psi_123/psi_23/psi_12

    Returns:
        Certified AlgAutomorphism

    Raises:
        UnknownObjectError: For an unknown name or bad parameters
    """
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownObjectError(
            f"Unknown automorphism {name!r}; known: {', '.join(AUTOMORPHISM_NAMES)}"
        )
    try:
        phi = builder(**params)
    except TypeError as e:
        raise UnknownObjectError(f"Bad parameters for automorphism {name}: {str(e)}") from e
    logger.debug(f"Built automorphism {phi.name} on {phi.algebra.name}")
    return phi
