"""
Automorphisms of Pauli algebras and of M_k(D) that respect the fine gradings.
"""

import logging
from typing import List, Optional, Sequence

from ..algebras.base import AlgElement
from ..algebras.pauli import matrix_algebra_MDk, pauli_index, pauli_matrix_algebra
from ..core.linalg import SparseVec
from ..exceptions import CertificationError, HomogeneityError, SymplecticFormError
from ..groups.abelian import AbHom
from .base import AlgAutomorphism, automorphism_check
from .extension import NoExtension, extend_from_generators

logger = logging.getLogger(__name__)


def homogeneous_inverse(d: AlgElement) -> AlgElement:
    """
    Inverse of c X_t in a Pauli algebra: c^{-1} kappa^{-1} X_{-t} with X_t X_{-t} = kappa.

    Raises:
        HomogeneityError: If d is not a nonzero multiple of one basis element
    """
    D = d.owner
    if len(d.vec) != 1:
        raise HomogeneityError(f"{d} is not a nonzero homogeneous element of {D.name}")
    ((t, c),) = d.vec.items()
    moduli = D.metadata["pauli_moduli"]
    _, T, _ = pauli_matrix_algebra(moduli)
    minus_t = pauli_index(T, T.scale(-1, list(T.element_coords())[t]))
    ((_, kappa),) = D.basis_product(t, minus_t).items()
    return D.basis(minus_t) * (c * kappa).inverse()


def monomial_automorphism(
    moduli: Sequence[int],
    k: int,
    perm: Sequence[int],
    d_list: Optional[Sequence[Optional[AlgElement]]] = None,
    psi0: Optional[AlgAutomorphism] = None,
    name: str = "monomial",
) -> AlgAutomorphism:
    """
    E_ij (x) X_t -> E_{pi(i) pi(j)} (x) d_i psi0(X_t) d_j^{-1} on M_k(D).

    Args:
        moduli: Pauli moduli of D
        k: Matrix size over D
        perm: pi as a sequence of 0-based images
        d_list: Homogeneous invertible elements of D (None entries mean 1)
        psi0: Automorphism of D (identity if omitted)
        name: Name of the result

    Returns:
        Certified AlgAutomorphism of M_k(D)
    """
    if sorted(perm) != list(range(k)):
        raise CertificationError(f"{list(perm)} is not a permutation of {k} indices")
    M = matrix_algebra_MDk(moduli, k)
    D, T, _ = pauli_matrix_algebra(moduli)
    n = D.dim
    ds = [d if d is not None else D.one() for d in (d_list or [None] * k)]
    if len(ds) != k:
        raise CertificationError(f"Need {k} scaling elements, got {len(ds)}")
    inverses = [homogeneous_inverse(d) for d in ds]
    if psi0 is not None and psi0.algebra is not D:
        raise CertificationError(f"{psi0.name} does not act on {D.name}")

    columns: List[SparseVec] = []
    for i in range(k):
        for j in range(k):
            for t in range(n):
                x = D.basis(t) if psi0 is None else psi0(D.basis(t))
                value = (ds[i] * x) * inverses[j]
                base = (perm[i] * k + perm[j]) * n
                columns.append({base + u: c for u, c in value.vec.items()})
    return automorphism_check(M, columns, name=name)


def ad_homogeneous(moduli: Sequence[int], t: Sequence[int]) -> AlgAutomorphism:
    """
    Conjugation by X_t on the Pauli algebra: X_u -> beta(t, u) X_u.

    The scalar is read off the algebra as the c with X_t X_u = c X_u X_t.
    """
    D, T, _ = pauli_matrix_algebra(moduli)
    xt = D.basis(pauli_index(T, t))
    columns = []
    for u in range(D.dim):
        xu = D.basis(u)
        c = (xt * xu).is_multiple_of(xu * xt)
        columns.append({u: c})
    return automorphism_check(D, columns, name=f"ad{list(T.normalize(t))}")


def division_aut_from_symplectic(moduli: Sequence[int], mu: AbHom) -> AlgAutomorphism:
    """
    An automorphism of D inducing mu on the support T.

    Each generator X_g is sent to lambda X_{mu(g)} with lambda chosen so that the
    image has the same order as X_g; the assignment is then extended.

    Raises:
        SymplecticFormError: If mu does not preserve beta
        CertificationError: If the extension fails
    """
    D, T, beta = pauli_matrix_algebra(moduli)
    if not beta.is_preserved_by(mu):
        raise SymplecticFormError(f"{mu} does not preserve the commutation bicharacter")
    generators: List[AlgElement] = []
    images: List[AlgElement] = []
    for g, order in zip(T.generators(), T.moduli):
        x = D.basis(pauli_index(T, mu.apply(g.coords)))
        power = x
        for _ in range(order - 1):
            power = power * x
        c = power.is_multiple_of(D.one())
        if c is None:
            raise CertificationError(f"X_{mu.apply(g.coords)}^{order} is not central")
        images.append(x * c.inverse().nth_root(order))
        generators.append(D.basis(pauli_index(T, g.coords)))
    result = extend_from_generators(D, generators, images, name=f"psi0{list(mu.key())}")
    if isinstance(result, NoExtension):
        raise CertificationError(f"No automorphism of {D.name} induces {mu}: {result.reason}")
    return result

