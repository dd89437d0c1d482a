"""
Automorphisms of the Albert algebra from pairs of norm-one octonions.

For x, y with n(x) = n(y) = 1 and c = xy, the map

    E_i -> E_i,
    iota_1(z) -> iota_1(chi(z)), iota_2(z) -> iota_2((zy) conj(x)),
    iota_3(z) -> iota_3(conj(x)(yz))

is an automorphism when chi is the product of the reflections in x and y.
The two possible orders of the reflections differ by a sign convention;
s_x s_y is tried first and s_y s_x is the fallback.
"""

import logging
from typing import List, Sequence, Tuple

from ..algebras.albert import albert_algebra, albert_nu_basis, block_map, frame
from ..algebras.base import AlgebraMap, AlgElement, StructAlgebra
from ..algebras.cayley import cayley_cd_basis, cayley_good_basis, square_normalizer
from ..core.linalg import SparseVec
from ..core.scalars import DEFAULT_CONDUCTOR, CycScalar, imaginary_unit, sqrt2
from ..exceptions import AlgebraConstructionError, CertificationError, SpinConventionError
from .base import AlgAutomorphism, automorphism_check

logger = logging.getLogger(__name__)


def reflection(C: StructAlgebra, v: AlgElement) -> AlgebraMap:
    """
    s_v(z) = z - n(z, v) / n(v) * v.

    Raises:
        AlgebraConstructionError: If n(v) = 0
    """
    nv = v.norm()
    if nv.is_zero:
        raise AlgebraConstructionError(f"Cannot reflect in the isotropic vector {v}")
    columns = []
    for b in C.basis_elements():
        columns.append((b - v * (b.polar(v) / nv)).vec)
    return AlgebraMap(C, C, columns)


def _spin_columns(
    A: StructAlgebra, x: AlgElement, y: AlgElement, chi: AlgebraMap
) -> List[SparseVec]:
    C = x.owner
    one = CycScalar.one(A.conductor)
    xbar = x.conj()
    blocks = {
        1: (1, chi, one),
        2: (2, lambda z: (z * y) * xbar, one),
        3: (3, lambda z: xbar * (y * z), one),
    }
    return block_map(A, C, {i: frame(A, i) for i in (1, 2, 3)}, blocks)


def spin_automorphism(
    A: StructAlgebra, x: AlgElement, y: AlgElement, name: str = "spin"
) -> AlgAutomorphism:
    """
    The automorphism psi_c of A for c = xy.

    Args:
        A: Albert algebra over the octonions x and y belong to
        x: Octonion of norm one
        y: Octonion of norm one
        name: Name of the result

    Returns:
        Certified AlgAutomorphism

    Raises:
        AlgebraConstructionError: If n(x) != 1 or n(y) != 1
        SpinConventionError: If neither order of the reflections certifies
    """
    C = x.owner
    for v, tag in ((x, "x"), (y, "y")):
        if v.norm() != CycScalar.one(C.conductor):
            raise AlgebraConstructionError(f"n({tag}) must be 1, got {v.norm()}")
    s_x, s_y = reflection(C, x), reflection(C, y)
    for chi, order in ((s_x.compose(s_y), "s_x s_y"), (s_y.compose(s_x), "s_y s_x")):
        try:
            phi = automorphism_check(A, _spin_columns(A, x, y, chi), name=name)
        except CertificationError as e:
            logger.debug(f"{name}: chi = {order} does not certify ({str(e)})")
            continue
        logger.debug(f"{name}: certified with chi = {order}")
        return phi
    raise SpinConventionError(f"{name}: no reflection order gives an automorphism")


def standard_spin_pair(conductor: int = DEFAULT_CONDUCTOR) -> Tuple[AlgElement, AlgElement]:
    """
    The pair x = (e1 + e2 + u1 + v1) / sqrt2, y = i (e1 - e2 + u1 - v1) / sqrt2
    in the good basis; both have norm one.
    """
    C = cayley_good_basis(conductor)
    r = sqrt2(conductor).inverse()
    e1, e2, u1, v1 = (C.basis(b) for b in ("e1", "e2", "u1", "v1"))
    x = (e1 + e2 + u1 + v1) * r
    y = (e1 - e2 + u1 - v1) * (r * imaginary_unit(conductor))
    return x, y


def spin_standard(conductor: int = DEFAULT_CONDUCTOR) -> AlgAutomorphism:
    """psi_c on the good-basis Albert algebra for the standard pair."""
    C = cayley_good_basis(conductor)
    x, y = standard_spin_pair(C.conductor)
    return spin_automorphism(albert_algebra(C), x, y, name="spin_standard")


# ── Spin automorphisms adapted to the Z_2^5 and Z x Z_2^3 gradings ──


def _unit_in_component(C: StructAlgebra, h: Sequence[int]) -> AlgElement:
    """Basis vector of the CD octonions of degree h, scaled to norm one."""
    degrees = [tuple(d) for d in C.metadata["cd_degrees"]]
    k = degrees.index(tuple(int(c) % 2 for c in h))
    b = C.basis(k)
    return b * square_normalizer(b)


def spin_beta_z25(h: Sequence[int]) -> AlgAutomorphism:
    """
    psi_c with x = 1 and y of degree h on the Albert algebra over the CD octonions.

    On Z_2^5 = <a> x <b> x T it fixes a and T pointwise and sends b to b + h.
    """
    C = cayley_cd_basis()
    A = albert_algebra(C)
    y = _unit_in_component(C, h)
    return spin_automorphism(A, C.one(), y, name=f"spin_beta_z25{list(h)}")


def zz23_spin_triple(h: Sequence[int]) -> Tuple[AlgElement, AlgElement, AlgElement]:
    """
    Norm-one CD octonions (x, y, z) behind spin_beta_zz23(h).

    x has degree h, y is the first non-unit basis vector outside degree h and
    z = -xy, so z has degree h + deg y.

    Raises:
        AlgebraConstructionError: If h = 0
    """
    if not any(int(c) % 2 for c in h):
        raise AlgebraConstructionError("spin_beta_zz23 needs a nonzero degree")
    C = cayley_cd_basis()
    x = _unit_in_component(C, h)
    target = tuple(int(c) % 2 for c in h)
    degrees = [tuple(d) for d in C.metadata["cd_degrees"]]
    k = next(j for j in range(1, C.dim) if degrees[j] != target)
    y = C.basis(k) * square_normalizer(C.basis(k))
    return x, y, -(x * y)


def spin_beta_zz23(h: Sequence[int]) -> AlgAutomorphism:
    """
    psi_c on the nu-basis with c = zy for the triple of ``zz23_spin_triple``.

    On nu_+-(w) it acts as w -> -(wy)z, so it shifts the odd degrees by h and
    fixes the even ones.

    Raises:
        AlgebraConstructionError: If h = 0
    """
    _, y, z = zz23_spin_triple(h)
    A = albert_algebra(cayley_cd_basis())
    phi = spin_automorphism(A, z, y, name=f"spin_beta_zz23{list(h)}")
    return automorphism_check(
        albert_nu_basis(), phi.transport(albert_nu_basis()).columns, name=phi.name
    )

