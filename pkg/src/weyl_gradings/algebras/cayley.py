"""
The Cayley algebra, Cayley-Dickson doubling and the Okubo algebra.

``cayley_good_basis`` is the split octonion algebra on the basis
e1, e2, u1, u2, u3, v1, v2, v3 with the isotropic norm n(e1, e2) = n(ui, vi) = 1.
``cayley_cd_basis`` builds the same algebra by three doublings of the ground
field, and ``cayley_cd_correspondence`` certifies the isomorphism between the
two bases. The Okubo algebra is the symmetric composition algebra with product
x * y = tau(conj(x)) tau^2(conj(y)).
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.linalg import SparseVec, vec_axpy, vec_scale
from ..core.scalars import DEFAULT_CONDUCTOR, CycScalar, ScalarLike, as_scalar, imaginary_unit
from ..exceptions import AlgebraConstructionError, CertificationError, MissingStructureError
from .base import AlgebraMap, AlgebraOptions, AlgElement, StructAlgebra, algebra_from_table

logger = logging.getLogger(__name__)

GOOD_LABELS: Tuple[str, ...] = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")

# Row x, column y holds x y; columns follow GOOD_LABELS.
CAYLEY_TABLE: Dict[str, Tuple[str, ...]] = {
    "e1": ("e1", "0", "u1", "u2", "u3", "0", "0", "0"),
    "e2": ("0", "e2", "0", "0", "0", "v1", "v2", "v3"),
    "u1": ("0", "u1", "0", "v3", "-v2", "-e1", "0", "0"),
    "u2": ("0", "u2", "-v3", "0", "v1", "0", "-e1", "0"),
    "u3": ("0", "u3", "v2", "-v1", "0", "0", "0", "-e1"),
    "v1": ("v1", "0", "-e2", "0", "0", "0", "u3", "-u2"),
    "v2": ("v2", "0", "0", "-e2", "0", "-u3", "0", "u1"),
    "v3": ("v3", "0", "0", "0", "-e2", "u2", "-u1", "0"),
}

OKUBO_LABELS: Tuple[str, ...] = ("e1", "e2", "u1", "v1", "u2", "v2", "u3", "v3")

# Row x, column y holds x * y; columns follow OKUBO_LABELS.
OKUBO_TABLE: Dict[str, Tuple[str, ...]] = {
    "e1": ("e2", "0", "0", "-v3", "0", "-v1", "0", "-v2"),
    "e2": ("0", "e1", "-u3", "0", "-u1", "0", "-u2", "0"),
    "u1": ("-u2", "0", "v1", "0", "-v3", "0", "0", "-e1"),
    "v1": ("0", "-v2", "0", "u1", "0", "-u3", "-e2", "0"),
    "u2": ("-u3", "0", "0", "-e1", "v2", "0", "-v1", "0"),
    "v2": ("0", "-v3", "-e2", "0", "0", "u2", "0", "-u1"),
    "u3": ("-u1", "0", "-v2", "0", "0", "-e1", "v3", "0"),
    "v3": ("0", "-v1", "0", "-u2", "-e2", "0", "0", "u3"),
}

CD_GENERATORS: Tuple[str, ...] = ("w1", "w2", "w3")

# Images of the doubling generators in the good basis.
CD_CORRESPONDENCE: Dict[str, Dict[str, int]] = {
    "1": {"e1": 1, "e2": 1},
    "w1": {"e1": 1, "e2": -1},
    "w2": {"u1": 1, "v1": -1},
    "w3": {"u2": 1, "v2": -1},
}


def _parse_entry(entry: str) -> Dict[str, int]:
    if entry == "0":
        return {}
    if entry.startswith("-"):
        return {entry[1:]: -1}
    return {entry: 1}


def table_mismatches(
    algebra: StructAlgebra, table: Dict[str, Tuple[str, ...]], columns: Sequence[str]
) -> List[Tuple[str, str]]:
    """
    Basis pairs on which an algebra disagrees with a reference table.

    Args:
        algebra: Algebra whose labels include the table's labels
        table: Row label -> entries in column order ("0", "x" or "-x")
        columns: Column labels

    Returns:
        Sorted list of mismatching (row, column) label pairs
    """
    bad = []
    for row, entries in table.items():
        for col, entry in zip(columns, entries):
            expected = algebra.vec(_parse_entry(entry))
            actual = algebra.product_vec(algebra.vec({row: 1}), algebra.vec({col: 1}))
            if actual != expected:
                bad.append((row, col))
    return sorted(bad)


# ── Cayley algebra in the good basis ─────────────────────────────────


@lru_cache(maxsize=None)
def cayley_good_basis(conductor: int = DEFAULT_CONDUCTOR) -> StructAlgebra:
    """
    The Cayley algebra on its good basis.

    Returns:
        Unital composition algebra with unit e1 + e2 and norm n(e1, e2) = n(ui, vi) = 1

    Examples:
        >>> C = cayley_good_basis()
        >>> C.basis("u1") * C.basis("u2") == C.basis("v3")
        True
    """
    constants = {}
    for row, entries in CAYLEY_TABLE.items():
        for col, entry in zip(GOOD_LABELS, entries):
            parsed = _parse_entry(entry)
            if parsed:
                constants[(row, col)] = parsed
    norm = {("e1", "e2"): 1}
    for i in (1, 2, 3):
        norm[(f"u{i}", f"v{i}")] = 1
    options = AlgebraOptions(
        conductor=conductor,
        unit={"e1": 1, "e2": 1},
        norm=norm,
        composition=True,
        metadata={"construction": "good_basis"},
    )
    return algebra_from_table(GOOD_LABELS, constants, options, name="cayley")


def conjugate(x: AlgElement) -> AlgElement:
    """
    x -> n(x, 1) 1 - x.

    Raises:
        MissingStructureError: If the owner has no unit or no norm
    """
    return x.conj()


def quadratic_relation_holds(x: AlgElement) -> bool:
    """x^2 - n(x, 1) x + n(x) 1 == 0."""
    one = x.owner.one()
    return (x * x - x * x.polar(one) + one * x.norm()).is_zero


def tau_columns(C: StructAlgebra, power: int = 1) -> List[SparseVec]:
    """
    Columns of tau^power, where tau fixes e1, e2 and sends ui -> u(i+1), vi -> v(i+1).
    """
    one = CycScalar.one(C.conductor)
    columns: List[SparseVec] = []
    for label in C.labels:
        if label[0] in "uv":
            target = f"{label[0]}{(int(label[1]) - 1 + power) % 3 + 1}"
        else:
            target = label
        columns.append({C.index(target): one})
    return columns


# ── Cayley-Dickson doubling ──────────────────────────────────────────


def ground_field(conductor: int = DEFAULT_CONDUCTOR) -> StructAlgebra:
    """The one-dimensional composition algebra F with n(1) = 1."""
    options = AlgebraOptions(
        conductor=conductor,
        unit={"1": 1},
        norm={("1", "1"): 2},
        commutative=True,
        composition=True,
        metadata={"cd_degrees": [[]], "cd_generators": []},
    )
    return algebra_from_table(["1"], {("1", "1"): {"1": 1}}, options, name="F")


def _doubled_label(label: str, generator: str) -> str:
    return generator if label == "1" else f"{label}{generator}"


def cd_double(
    Q: StructAlgebra,
    alpha: ScalarLike,
    generator: str = "w",
    name: Optional[str] = None,
) -> StructAlgebra:
    """
    Cayley-Dickson doubling Q + Qu with u^2 = -alpha.

    The product is (a + bu)(c + du) = (ac - alpha conj(d) b) + (da + b conj(c))u and
    the norm is n(a + bu) = n(a) + alpha n(b). The Z_2-grading (Q, Qu) is appended to
    the ``cd_degrees`` metadata.

    Args:
        Q: Unital composition algebra of dimension 1, 2 or 4
        alpha: Nonzero scalar
        generator: Label of the new generator u
        name: Name of the doubled algebra

    Returns:
        Doubled composition algebra, validated

    Raises:
        AlgebraConstructionError: If alpha is zero or Q has dimension 8
        MissingStructureError: If Q has no unit or no norm
    """
    a = as_scalar(alpha, Q.conductor)
    if a.is_zero:
        raise AlgebraConstructionError("Cayley-Dickson doubling needs alpha != 0")
    if Q.dim not in (1, 2, 4):
        raise AlgebraConstructionError(
            f"Cayley-Dickson doubling of a {Q.dim}-dimensional algebra is not supported"
        )
    if not Q.has_unit or not Q.has_norm:
        raise MissingStructureError(f"Doubling {Q.name} needs a unit and a norm")

    d = Q.dim
    labels = list(Q.labels) + [_doubled_label(label, generator) for label in Q.labels]

    def shift(vec: SparseVec) -> SparseVec:
        return {k + d: v for k, v in vec.items()}

    table: Dict[Tuple[int, int], SparseVec] = {}
    basis = [{i: CycScalar.one(Q.conductor)} for i in range(d)]
    bars = [Q.conjugate_vec(b) for b in basis]
    for i in range(d):
        for j in range(d):
            table[(i, j)] = Q.product_vec(basis[i], basis[j])
            table[(i, j + d)] = shift(Q.product_vec(basis[j], basis[i]))
            table[(i + d, j)] = shift(Q.product_vec(basis[i], bars[j]))
            table[(i + d, j + d)] = vec_scale(Q.product_vec(bars[j], basis[i]), -a)

    polar: Dict[Tuple[int, int], CycScalar] = {}
    for i in range(d):
        for j in range(i, d):
            value = Q.polar_vec(basis[i], basis[j])
            if not value.is_zero:
                polar[(i, j)] = value
                polar[(i + d, j + d)] = value * a

    degrees = [list(deg) + [0] for deg in Q.metadata.get("cd_degrees", [[]] * d)]
    degrees += [deg[:-1] + [1] for deg in degrees]
    doubled = StructAlgebra(
        name or f"{Q.name}+{generator}",
        labels,
        table,
        conductor=Q.conductor,
        unit=dict(Q.unit or {}),
        polar=polar,
        flags={"composition": True},
        metadata={
            "cd_degrees": degrees,
            "cd_generators": list(Q.metadata.get("cd_generators", [])) + [generator],
            "cd_alphas": list(Q.metadata.get("cd_alphas", [])) + [a.to_string()],
        },
    )
    doubled.validate()
    logger.info(f"Doubled {Q.name} to dimension {doubled.dim} with generator {generator}")
    return doubled


@lru_cache(maxsize=None)
def cayley_cd_basis(conductor: int = DEFAULT_CONDUCTOR) -> StructAlgebra:
    """
    The Cayley algebra by three doublings of F with alpha = -1, so that w_i^2 = 1.

    Basis labels are 1, w1, w2, w1w2, w3, w1w3, w2w3, w1w2w3, where a label
    ``qw`` denotes the product q w in that order.
    """
    algebra = ground_field(conductor)
    for generator in CD_GENERATORS:
        algebra = cd_double(algebra, -1, generator)
    algebra.name = "cayley_cd"
    algebra.metadata["construction"] = "cayley_dickson"
    return algebra


def _cd_word(label: str) -> List[str]:
    if label == "1":
        return []
    return [label[k : k + 2] for k in range(0, len(label), 2)]


@lru_cache(maxsize=None)
def cayley_cd_correspondence(conductor: int = DEFAULT_CONDUCTOR) -> AlgebraMap:
    """
    Certified isomorphism from ``cayley_cd_basis`` to ``cayley_good_basis``.

    w1 -> e1 - e2, w2 -> u1 - v1, w3 -> u2 - v2, extended to products left to right.

    Raises:
        CertificationError: If the map is not multiplicative or not invertible
    """
    cd = cayley_cd_basis(conductor)
    C = cayley_good_basis(conductor)
    images: Dict[str, AlgElement] = {g: C.element(v) for g, v in CD_CORRESPONDENCE.items()}
    columns = []
    for label in cd.labels:
        word = _cd_word(label)
        image = C.one()
        for generator in word:
            image = image * images[generator]
        columns.append(image.vec)
    iso = AlgebraMap(cd, C, columns)
    witness = iso.multiplicativity_witness()
    if witness is not None:
        raise CertificationError("Cayley-Dickson correspondence is not multiplicative", witness)
    if not iso.is_invertible():
        raise CertificationError("Cayley-Dickson correspondence is singular")
    logger.info("Certified Cayley-Dickson correspondence")
    return iso


# ── Okubo algebra ────────────────────────────────────────────────────


def symmetric_composition_witness(O: StructAlgebra) -> Optional[Tuple[str, str, str]]:
    """First basis triple with n(x*y, z) != n(x, y*z), if any."""
    one = CycScalar.one(O.conductor)
    basis = [{i: one} for i in range(O.dim)]
    for i in range(O.dim):
        for j in range(O.dim):
            xy = O.product_vec(basis[i], basis[j])
            for k in range(O.dim):
                yz = O.product_vec(basis[j], basis[k])
                if O.polar_vec(xy, basis[k]) != O.polar_vec(basis[i], yz):
                    return O.labels[i], O.labels[j], O.labels[k]
    return None


@lru_cache(maxsize=None)
def okubo_algebra(conductor: int = DEFAULT_CONDUCTOR) -> StructAlgebra:
    """
    The Okubo algebra (C, *) with x * y = tau(conj(x)) tau^2(conj(y)).

    The table is computed from the formula and compared with the reference table
    entry by entry.

    Raises:
        AlgebraConstructionError: If the computed product disagrees with the
            reference table or n(x*y, z) = n(x, y*z) fails
    """
    C = cayley_good_basis(conductor)
    tau = AlgebraMap(C, C, tau_columns(C, 1))
    tau2 = AlgebraMap(C, C, tau_columns(C, 2))
    one = CycScalar.one(conductor)
    table: Dict[Tuple[int, int], SparseVec] = {}
    for i in range(C.dim):
        left = tau.apply_vec(C.conjugate_vec({i: one}))
        for j in range(C.dim):
            right = tau2.apply_vec(C.conjugate_vec({j: one}))
            table[(i, j)] = C.product_vec(left, right)

    polar = {}
    for i in range(C.dim):
        for j in range(i, C.dim):
            value = C.polar_vec({i: one}, {j: one})
            if not value.is_zero:
                polar[(i, j)] = value
    okubo = StructAlgebra(
        "okubo",
        C.labels,
        table,
        conductor=conductor,
        polar=polar,
        flags={"composition": True},
        metadata={"construction": "okubo"},
    )

    mismatches = table_mismatches(okubo, OKUBO_TABLE, OKUBO_LABELS)
    if mismatches:
        raise AlgebraConstructionError(
            f"Okubo product disagrees with its reference table at {mismatches[:4]}"
        )
    okubo.validate()
    triple = symmetric_composition_witness(okubo)
    if triple is not None:
        raise AlgebraConstructionError(f"Okubo norm is not associative at {triple}")
    logger.info("Built Okubo algebra")
    return okubo


def derive_okubo_degrees(O: Optional[StructAlgebra] = None) -> Dict[str, Tuple[int, int]]:
    """
    Z_3^2-degrees of the Okubo basis, propagated from deg e1 = (1, 0), deg u1 = (0, 1).

    Every basis product that is a multiple of a single basis vector assigns that
    vector the sum of the factors' degrees; propagation repeats until all eight
    degrees are known. The result is then checked against every nonzero product.

    Returns:
        Label -> degree in Z_3 x Z_3

    Raises:
        AlgebraConstructionError: If the seeds do not determine a consistent grading
    """
    O = O or okubo_algebra()
    degrees: Dict[str, Tuple[int, int]] = {"e1": (1, 0), "u1": (0, 1)}
    changed = True
    while changed and len(degrees) < O.dim:
        changed = False
        for i, j, vec in O.structure_constants():
            a, b = O.labels[i], O.labels[j]
            if a not in degrees or b not in degrees or len(vec) != 1:
                continue
            target = O.labels[next(iter(vec))]
            if target not in degrees:
                da, db = degrees[a], degrees[b]
                degrees[target] = ((da[0] + db[0]) % 3, (da[1] + db[1]) % 3)
                logger.debug(f"Okubo degree of {target} is {degrees[target]}")
                changed = True
    if len(degrees) < O.dim:
        missing = [label for label in O.labels if label not in degrees]
        raise AlgebraConstructionError(f"Okubo degrees undetermined for {missing}")
    for i, j, vec in O.structure_constants():
        da, db = degrees[O.labels[i]], degrees[O.labels[j]]
        expected = ((da[0] + db[0]) % 3, (da[1] + db[1]) % 3)
        for k in vec:
            if degrees[O.labels[k]] != expected:
                raise AlgebraConstructionError(
                    f"Okubo degrees inconsistent at {O.labels[i]} * {O.labels[j]}"
                )
    return {label: degrees[label] for label in O.labels}


def square_normalizer(x: AlgElement) -> CycScalar:
    """
    Scalar c with n(c x) = 1 for a basis-like element of norm +-1.

    Raises:
        AlgebraConstructionError: If n(x) is not +-1
    """
    value = x.norm()
    if value == 1:
        return CycScalar.one(x.owner.conductor)
    if value == -1:
        return imaginary_unit(x.owner.conductor)
    raise AlgebraConstructionError(f"Cannot normalize {x} with norm {value}")


def image_in_good_basis(cd_vec: SparseVec, conductor: int = DEFAULT_CONDUCTOR) -> SparseVec:
    """Good-basis coordinates of a vector given in the Cayley-Dickson basis."""
    iso = cayley_cd_correspondence(conductor)
    out: SparseVec = {}
    for k, c in cd_vec.items():
        vec_axpy(out, c, iso.columns[k])
    return out
