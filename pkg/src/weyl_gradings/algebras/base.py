"""
Finite-dimensional algebras given by structure constants.

A StructAlgebra stores a labelled basis, the sparse products of basis pairs
and, optionally, a unit, a quadratic form (through its polar form) and a
linear trace functional. Elements are sparse coordinate vectors over the
algebra's cyclotomic field. Linear maps between algebras are AlgebraMap
instances; ``rebase`` produces the same algebra on a new basis and keeps the
change of basis so that structure can be transported back and forth.
"""

import logging
import random
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..config import get_settings
from ..core.base import Artifact
from ..core.linalg import (
    EchelonBasis,
    SparseVec,
    express,
    invert_columns,
    vec_add,
    vec_axpy,
    vec_scale,
    vec_sub,
)
from ..core.scalars import DEFAULT_CONDUCTOR, CycScalar, ScalarLike, as_scalar
from ..exceptions import AlgebraConstructionError, MissingStructureError, SerializationError

logger = logging.getLogger(__name__)

Key = Union[int, str]


class AlgebraOptions(BaseModel):
    """
    Declared structure for ``algebra_from_table``.

    Scalars may be ints, Fractions, CycScalars or scalar strings. Every
    declared property is checked when the algebra is built.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    conductor: int = Field(default=DEFAULT_CONDUCTOR, ge=1)
    unit: Optional[Dict[str, Any]] = None
    norm: Optional[Dict[Tuple[str, str], Any]] = None
    trace: Optional[Dict[str, Any]] = None
    commutative: bool = False
    anticommutative: bool = False
    composition: bool = False
    composition_samples: Optional[int] = None
    metadata: Dict[str, Any] = Field(default_factory=dict)


class StructAlgebra(Artifact):
    """
    Algebra with a labelled basis and sparse structure constants.

    Attributes:
        name: Identifier used by the workspace
        labels: Basis labels in basis order
        conductor: N, the algebra is defined over Q(zeta_N)
        unit: Coordinates of the unit, if declared
        trace: Linear functional as coefficients on basis vectors, if declared
        flags: Declared properties (commutative, anticommutative, composition)
        metadata: Construction data (e.g. doubling generators, Pauli moduli)
        parent: Algebra this one was rebased from, if any
        to_parent: Columns expressing each basis vector in the parent basis
        from_parent: Columns expressing each parent basis vector in this basis
    """

    kind = "algebra"

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        table: Mapping[Tuple[int, int], SparseVec],
        conductor: int = DEFAULT_CONDUCTOR,
        unit: Optional[SparseVec] = None,
        polar: Optional[Mapping[Tuple[int, int], CycScalar]] = None,
        trace: Optional[SparseVec] = None,
        flags: Optional[Mapping[str, bool]] = None,
        metadata: Optional[Mapping[str, Any]] = None,
    ) -> None:
        self.name = name
        self.labels: Tuple[str, ...] = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise AlgebraConstructionError(f"Duplicate basis labels in {name}")
        self._index = {label: i for i, label in enumerate(self.labels)}
        self.conductor = conductor
        self._table: Dict[Tuple[int, int], SparseVec] = {
            key: {k: v.embed(conductor) for k, v in vec.items() if not v.is_zero}
            for key, vec in table.items()
        }
        self._table = {key: vec for key, vec in self._table.items() if vec}
        self.unit = {k: v.embed(conductor) for k, v in unit.items()} if unit is not None else None
        self._polar: Optional[Dict[Tuple[int, int], CycScalar]] = None
        if polar is not None:
            self._polar = {}
            for (i, j), value in polar.items():
                if not value.is_zero:
                    self._polar[(i, j)] = value.embed(conductor)
                    self._polar[(j, i)] = value.embed(conductor)
        self.trace = (
            {k: v.embed(conductor) for k, v in trace.items()} if trace is not None else None
        )
        self.flags: Dict[str, bool] = {
            "commutative": False,
            "anticommutative": False,
            "composition": False,
        }
        self.flags.update(flags or {})
        self.metadata: Dict[str, Any] = dict(metadata or {})
        self.parent: Optional["StructAlgebra"] = None
        self.to_parent: Optional[List[SparseVec]] = None
        self.from_parent: Optional[List[SparseVec]] = None

    # ── Basis and elements ───────────────────────────────────────────

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def has_unit(self) -> bool:
        return self.unit is not None

    @property
    def has_norm(self) -> bool:
        return self._polar is not None

    def index(self, key: Key) -> int:
        """Basis index of a label (ints pass through)."""
        if isinstance(key, int):
            if not 0 <= key < self.dim:
                raise AlgebraConstructionError(f"Basis index {key} out of range for {self.name}")
            return key
        try:
            return self._index[key]
        except KeyError as e:
            raise AlgebraConstructionError(f"Unknown basis label {key!r} in {self.name}") from e

    def scalar(self, value: ScalarLike) -> CycScalar:
        return as_scalar(value, self.conductor)

    def vec(self, coeffs: Mapping[Key, ScalarLike]) -> SparseVec:
        out: SparseVec = {}
        for key, value in coeffs.items():
            vec_axpy(out, self.scalar(value), {self.index(key): CycScalar.one(self.conductor)})
        return out

    def element(self, coeffs: Union[Mapping[Key, ScalarLike], SparseVec]) -> "AlgElement":
        """
        Element from a mapping of labels (or indices) to scalars.

        Examples:
            >>> C = cayley_good_basis()
            >>> C.element({"e1": 1, "e2": 1}) == C.one()
            True
        """
        return AlgElement(self, self.vec(coeffs))  # type: ignore[arg-type]

    def basis(self, key: Key) -> "AlgElement":
        return AlgElement(self, {self.index(key): CycScalar.one(self.conductor)})

    def basis_elements(self) -> List["AlgElement"]:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> "AlgElement":
        return AlgElement(self, {})

    def one(self) -> "AlgElement":
        if self.unit is None:
            raise MissingStructureError(f"{self.name} has no unit")
        return AlgElement(self, dict(self.unit))

    # ── Products and forms ───────────────────────────────────────────

    def basis_product(self, i: int, j: int) -> SparseVec:
        return self._table.get((i, j), {})

    def product_vec(self, a: SparseVec, b: SparseVec) -> SparseVec:
        """Product of two coordinate vectors."""
        out: SparseVec = {}
        table = self._table
        for i, ai in a.items():
            for j, bj in b.items():
                prod = table.get((i, j))
                if prod is not None:
                    vec_axpy(out, ai * bj, prod)
        return out

    def polar_vec(self, a: SparseVec, b: SparseVec) -> CycScalar:
        """Polar form n(a, b) = n(a + b) - n(a) - n(b)."""
        if self._polar is None:
            raise MissingStructureError(f"{self.name} has no norm")
        total = CycScalar.zero(self.conductor)
        polar = self._polar
        for i, ai in a.items():
            for j, bj in b.items():
                value = polar.get((i, j))
                if value is not None:
                    total = total + ai * bj * value
        return total

    def norm_vec(self, a: SparseVec) -> CycScalar:
        return self.polar_vec(a, a) / 2

    def conjugate_vec(self, a: SparseVec) -> SparseVec:
        """x -> n(x, 1) 1 - x."""
        if self.unit is None:
            raise MissingStructureError(f"{self.name} has no unit, conjugation is undefined")
        return vec_sub(vec_scale(self.unit, self.polar_vec(a, self.unit)), a)

    def trace_vec(self, a: SparseVec) -> CycScalar:
        if self.trace is None:
            raise MissingStructureError(f"{self.name} has no trace form")
        total = CycScalar.zero(self.conductor)
        for k, v in a.items():
            t = self.trace.get(k)
            if t is not None:
                total = total + v * t
        return total

    def structure_constants(self) -> Iterable[Tuple[int, int, SparseVec]]:
        for (i, j), vec in sorted(self._table.items()):
            yield i, j, vec

    # ── Checks ───────────────────────────────────────────────────────

    def unit_witness(self) -> Optional[str]:
        """First basis label on which the declared unit fails, if any."""
        if self.unit is None:
            return None
        for i in range(self.dim):
            e = {i: CycScalar.one(self.conductor)}
            if self.product_vec(self.unit, e) != e or self.product_vec(e, self.unit) != e:
                return self.labels[i]
        return None

    def commutativity_witness(self, sign: int = 1) -> Optional[Tuple[str, str]]:
        """First basis pair with b_i b_j != sign * b_j b_i, if any."""
        sign_scalar = CycScalar.from_rational(sign, self.conductor)
        for i in range(self.dim):
            for j in range(i, self.dim):
                left = self.basis_product(i, j)
                right = vec_scale(self.basis_product(j, i), sign_scalar)
                if left != right:
                    return self.labels[i], self.labels[j]
        return None

    def composition_witness(self, samples: int = 0, seed: int = 0) -> Optional[Tuple[str, str]]:
        """
        First pair violating n(xy) = n(x) n(y).

        Basis pairs are checked exhaustively, then ``samples`` random pairs with
        small integer coordinates.
        """
        for i in range(self.dim):
            for j in range(self.dim):
                a = {i: CycScalar.one(self.conductor)}
                b = {j: CycScalar.one(self.conductor)}
                if self.norm_vec(self.product_vec(a, b)) != self.norm_vec(a) * self.norm_vec(b):
                    return self.labels[i], self.labels[j]
        rng = random.Random(seed)
        for k in range(samples):
            a = self._random_vec(rng)
            b = self._random_vec(rng)
            if self.norm_vec(self.product_vec(a, b)) != self.norm_vec(a) * self.norm_vec(b):
                return f"sample{k}.x", f"sample{k}.y"
        return None

    def _random_vec(self, rng: random.Random) -> SparseVec:
        out: SparseVec = {}
        for i in range(self.dim):
            c = rng.randint(-2, 2)
            if c:
                out[i] = CycScalar.from_rational(c, self.conductor)
        return out

    def random_element(self, rng: random.Random) -> "AlgElement":
        return AlgElement(self, self._random_vec(rng))

    def validate(self, samples: Optional[int] = None) -> None:
        """
        Run every declared structural check.

        Args:
            samples: Random pairs for the composition check (defaults to settings)

        Raises:
            AlgebraConstructionError: On the first failing check
        """
        witness = self.unit_witness()
        if witness is not None:
            raise AlgebraConstructionError(f"{self.name}: declared unit fails on {witness}")
        if self.flags["commutative"]:
            pair = self.commutativity_witness(1)
            if pair is not None:
                raise AlgebraConstructionError(f"{self.name}: not commutative at {pair}")
        if self.flags["anticommutative"]:
            pair = self.commutativity_witness(-1)
            if pair is not None:
                raise AlgebraConstructionError(f"{self.name}: not anticommutative at {pair}")
        if self.flags["composition"]:
            if self._polar is None:
                raise MissingStructureError(f"{self.name}: composition declared without a norm")
            settings = get_settings().algebras
            if samples is None:
                samples = settings.composition_samples
            pair = self.composition_witness(samples, settings.random_seed)
            if pair is not None:
                raise AlgebraConstructionError(f"{self.name}: n(xy) != n(x)n(y) at {pair}")
        logger.debug(f"Validated algebra {self.name} (dim {self.dim})")

    # ── Change of basis ──────────────────────────────────────────────

    def rebase(
        self, columns: Sequence[SparseVec], labels: Sequence[str], name: str
    ) -> "StructAlgebra":
        """
        The same algebra on a new basis.

        Args:
            columns: New basis vectors in current coordinates
            labels: Labels of the new basis vectors
            name: Name of the rebased algebra

        Returns:
            Rebased algebra with ``parent``, ``to_parent`` and ``from_parent`` set

        Raises:
            AlgebraConstructionError: If the columns are not a basis
        """
        if len(columns) != self.dim or len(labels) != self.dim:
            raise AlgebraConstructionError(f"Rebasing {self.name} needs {self.dim} vectors")
        one = CycScalar.one(self.conductor)
        try:
            inverse = invert_columns(columns, one)
        except ValueError as e:
            raise AlgebraConstructionError(f"New basis of {self.name} is singular: {str(e)}") from e

        def to_new(v: SparseVec) -> SparseVec:
            out: SparseVec = {}
            for k, c in v.items():
                vec_axpy(out, c, inverse[k])
            return out

        table: Dict[Tuple[int, int], SparseVec] = {}
        for i, ci in enumerate(columns):
            for j, cj in enumerate(columns):
                prod = self.product_vec(ci, cj)
                if prod:
                    table[(i, j)] = to_new(prod)
        unit = to_new(self.unit) if self.unit is not None else None
        polar = None
        if self._polar is not None:
            polar = {}
            for i, ci in enumerate(columns):
                for j in range(i, self.dim):
                    value = self.polar_vec(ci, columns[j])
                    if not value.is_zero:
                        polar[(i, j)] = value
        trace: Optional[SparseVec] = None
        if self.trace is not None:
            trace = {}
            for i, ci in enumerate(columns):
                value = self.trace_vec(ci)
                if not value.is_zero:
                    trace[i] = value

        rebased = StructAlgebra(
            name,
            labels,
            table,
            conductor=self.conductor,
            unit=unit,
            polar=polar,
            trace=trace,
            flags=self.flags,
            metadata=dict(self.metadata, rebased_from=self.name),
        )
        rebased.parent = self
        rebased.to_parent = [dict(c) for c in columns]
        rebased.from_parent = inverse
        logger.info(f"Rebased {self.name} to {name}")
        return rebased

    def coordinates_in_parent(self, vec: SparseVec) -> SparseVec:
        if self.to_parent is None:
            raise MissingStructureError(f"{self.name} was not obtained by rebasing")
        out: SparseVec = {}
        for k, c in vec.items():
            vec_axpy(out, c, self.to_parent[k])
        return out

    def coordinates_from_parent(self, vec: SparseVec) -> SparseVec:
        if self.from_parent is None:
            raise MissingStructureError(f"{self.name} was not obtained by rebasing")
        out: SparseVec = {}
        for k, c in vec.items():
            vec_axpy(out, c, self.from_parent[k])
        return out

    # ── Serialization ────────────────────────────────────────────────

    def to_dict(self) -> Dict[str, Any]:
        def enc(vec: SparseVec) -> List[List[Any]]:
            return [[k, vec[k].to_string()] for k in sorted(vec)]

        data: Dict[str, Any] = {
            "kind": self.kind,
            "name": self.name,
            "labels": list(self.labels),
            "conductor": self.conductor,
            "products": [[i, j, enc(vec)] for i, j, vec in self.structure_constants()],
            "flags": dict(sorted(self.flags.items())),
            "unit": enc(self.unit) if self.unit is not None else None,
            "norm": None,
            "trace": enc(self.trace) if self.trace is not None else None,
            "metadata": self.metadata,
        }
        if self._polar is not None:
            data["norm"] = [
                [i, j, v.to_string()] for (i, j), v in sorted(self._polar.items()) if i <= j
            ]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **context: Any) -> "StructAlgebra":
        if data.get("kind", "algebra") != "algebra":
            raise SerializationError(f"Expected an algebra, got {data.get('kind')}")

        def dec(items: Optional[List[List[Any]]]) -> Optional[SparseVec]:
            if items is None:
                return None
            return {int(k): CycScalar.from_string(s) for k, s in items}

        table = {(int(i), int(j)): dec(items) or {} for i, j, items in data["products"]}
        polar = None
        if data.get("norm") is not None:
            polar = {(int(i), int(j)): CycScalar.from_string(s) for i, j, s in data["norm"]}
        return cls(
            data["name"],
            data["labels"],
            table,
            conductor=int(data["conductor"]),
            unit=dec(data.get("unit")),
            polar=polar,
            trace=dec(data.get("trace")),
            flags=data.get("flags"),
            metadata=data.get("metadata"),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructAlgebra):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.name, self.labels))


class AlgElement:
    """
    Element of a StructAlgebra as a sparse coordinate vector.

    Supports +, -, scalar multiplication (on either side) and the algebra
    product ``x * y``.
    """

    __slots__ = ("owner", "vec")

    def __init__(self, owner: StructAlgebra, vec: SparseVec) -> None:
        self.owner = owner
        self.vec = {k: v for k, v in vec.items() if not v.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.vec

    @property
    def coords(self) -> List[CycScalar]:
        zero = CycScalar.zero(self.owner.conductor)
        return [self.vec.get(i, zero) for i in range(self.owner.dim)]

    def __getitem__(self, key: Key) -> CycScalar:
        return self.vec.get(self.owner.index(key), CycScalar.zero(self.owner.conductor))

    def __add__(self, other: "AlgElement") -> "AlgElement":
        return AlgElement(self.owner, vec_add(self.vec, other.vec))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return AlgElement(self.owner, vec_sub(self.vec, other.vec))

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.owner, {k: -v for k, v in self.vec.items()})

    def __mul__(self, other: Any) -> "AlgElement":
        if isinstance(other, AlgElement):
            return AlgElement(self.owner, self.owner.product_vec(self.vec, other.vec))
        if isinstance(other, (int, Fraction, CycScalar, str)):
            return AlgElement(self.owner, vec_scale(self.vec, self.owner.scalar(other)))
        return NotImplemented

    def __rmul__(self, other: Any) -> "AlgElement":
        if isinstance(other, (int, Fraction, CycScalar, str)):
            return AlgElement(self.owner, vec_scale(self.vec, self.owner.scalar(other)))
        return NotImplemented

    def __truediv__(self, other: Any) -> "AlgElement":
        return self * self.owner.scalar(other).inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.vec == other.vec

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.vec)))

    def conj(self) -> "AlgElement":
        return AlgElement(self.owner, self.owner.conjugate_vec(self.vec))

    def norm(self) -> CycScalar:
        return self.owner.norm_vec(self.vec)

    def polar(self, other: "AlgElement") -> CycScalar:
        return self.owner.polar_vec(self.vec, other.vec)

    def trace(self) -> CycScalar:
        return self.owner.trace_vec(self.vec)

    def is_multiple_of(self, other: "AlgElement") -> Optional[CycScalar]:
        """c with self == c * other, if it exists (other nonzero)."""
        if other.is_zero:
            return None
        if self.is_zero:
            return CycScalar.zero(self.owner.conductor)
        if set(self.vec) != set(other.vec):
            return None
        k = next(iter(other.vec))
        c = self.vec[k] / other.vec[k]
        if all(self.vec[i] == c * other.vec[i] for i in other.vec):
            return c
        return None

    def __repr__(self) -> str:
        if not self.vec:
            return "0"
        terms = []
        for k in sorted(self.vec):
            c = self.vec[k]
            label = self.owner.labels[k]
            if c == 1:
                terms.append(label)
            elif c == -1:
                terms.append(f"-{label}")
            else:
                terms.append(f"({c.to_string()})*{label}")
        return " + ".join(terms)


class AlgebraMap:
    """
    Linear map between algebras given by the images of basis vectors.

    Attributes:
        source: Domain
        target: Codomain
        columns: columns[j] is the image of source basis vector j in target coordinates
    """

    def __init__(
        self, source: StructAlgebra, target: StructAlgebra, columns: Sequence[SparseVec]
    ) -> None:
        if len(columns) != source.dim:
            raise AlgebraConstructionError(
                f"A map out of {source.name} needs {source.dim} columns, got {len(columns)}"
            )
        self.source = source
        self.target = target
        self.columns: List[SparseVec] = [
            {k: v.embed(target.conductor) for k, v in col.items() if not v.is_zero}
            for col in columns
        ]

    def apply_vec(self, vec: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for k, c in vec.items():
            vec_axpy(out, c, self.columns[k])
        return out

    def __call__(self, x: AlgElement) -> AlgElement:
        return AlgElement(self.target, self.apply_vec(x.vec))

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """self after other."""
        return AlgebraMap(other.source, self.target, [self.apply_vec(c) for c in other.columns])

    def is_invertible(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        basis = EchelonBasis(self.target.dim)
        for col in self.columns:
            basis.insert(col)
        return basis.is_full

    def inverse_columns(self) -> List[SparseVec]:
        return invert_columns(self.columns, CycScalar.one(self.target.conductor))

    def multiplicativity_witness(self) -> Optional[Tuple[str, str]]:
        """First basis pair with f(b_i b_j) != f(b_i) f(b_j), if any."""
        src, tgt = self.source, self.target
        cols = self.columns
        for i in range(src.dim):
            for j in range(src.dim):
                lhs = self.apply_vec(src.basis_product(i, j))
                rhs = tgt.product_vec(cols[i], cols[j])
                if lhs != rhs:
                    return src.labels[i], src.labels[j]
        return None

    def is_identity(self) -> bool:
        one = CycScalar.one(self.target.conductor)
        return all(col == {j: one} for j, col in enumerate(self.columns))

    def __repr__(self) -> str:
        return f"AlgebraMap({self.source.name} -> {self.target.name})"


def _resolve_vec(
    labels: Sequence[str],
    index: Dict[str, int],
    conductor: int,
    coeffs: Mapping[Key, ScalarLike],
) -> SparseVec:
    out: SparseVec = {}
    one = CycScalar.one(conductor)
    for key, value in coeffs.items():
        k = key if isinstance(key, int) else index[key]
        vec_axpy(out, as_scalar(value, conductor), {k: one})
    return out


def algebra_from_table(
    labels: Sequence[str],
    constants: Mapping[Tuple[Key, Key], Mapping[Key, ScalarLike]],
    options: Optional[AlgebraOptions] = None,
    name: str = "algebra",
) -> StructAlgebra:
    """
    Build an algebra from a multiplication table and run its declared checks.

    Args:
        labels: Basis labels
        constants: Map (b_i, b_j) -> {b_k: coefficient} for the nonzero products;
            keys may be labels or basis indices
        options: Declared unit, norm (polar values on basis pairs), trace and flags
        name: Algebra name

    Returns:
        Validated StructAlgebra

    Raises:
        AlgebraConstructionError: If a declared property fails

    Examples:
        >>> F = algebra_from_table(["1"], {("1", "1"): {"1": 1}}, AlgebraOptions(unit={"1": 1}))
        >>> F.dim
        1
    """
    options = options or AlgebraOptions()
    conductor = options.conductor
    index = {label: i for i, label in enumerate(labels)}
    try:
        table = {}
        for (a, b), coeffs in constants.items():
            i = a if isinstance(a, int) else index[a]
            j = b if isinstance(b, int) else index[b]
            table[(i, j)] = _resolve_vec(labels, index, conductor, coeffs)
        unit: Optional[SparseVec] = None
        if options.unit is not None:
            unit = _resolve_vec(labels, index, conductor, options.unit)
        trace: Optional[SparseVec] = None
        if options.trace is not None:
            trace = _resolve_vec(labels, index, conductor, options.trace)
        polar = None
        if options.norm is not None:
            polar = {}
            for (a, b), value in options.norm.items():
                i = a if isinstance(a, int) else index[a]
                j = b if isinstance(b, int) else index[b]
                polar[(min(i, j), max(i, j))] = as_scalar(value, conductor)
    except KeyError as e:
        raise AlgebraConstructionError(f"Unknown basis label in table of {name}: {str(e)}") from e

    algebra = StructAlgebra(
        name,
        labels,
        table,
        conductor=conductor,
        unit=unit,
        polar=polar,
        trace=trace,
        flags={
            "commutative": options.commutative,
            "anticommutative": options.anticommutative,
            "composition": options.composition,
        },
        metadata=options.metadata,
    )
    algebra.validate(options.composition_samples)
    logger.info(f"Built algebra {name} (dim {algebra.dim})")
    return algebra


# ── Powers and the cubic relation ────────────────────────────────────


class CubicFit(NamedTuple):
    """Coefficients of X^3 = t X^2 - s X + n 1."""

    t: CycScalar
    s: CycScalar
    n: CycScalar


class DegenerateFlag(NamedTuple):
    """
    {1, X, X^2} is dependent.

    ``relation`` maps "1", "X" and "X2" to the coefficients of the dependency.
    """

    relation: Dict[str, CycScalar]


def jordan_power(x: AlgElement, k: int) -> AlgElement:
    """
    X^k for k <= 3 with X^2 = X X and X^3 = X^2 X.

    Raises:
        MissingStructureError: For k = 0 in an algebra without unit
        ValueError: If k is not in 0..3
    """
    if k == 0:
        return x.owner.one()
    if k == 1:
        return x
    if k == 2:
        return x * x
    if k == 3:
        return (x * x) * x
    raise ValueError(f"jordan_power supports exponents 0..3, got {k}")


def cubic_fit(x: AlgElement) -> Union[CubicFit, DegenerateFlag]:
    """
    Fit X^3 = t X^2 - s X + n 1.

    Args:
        x: Element of a unital commutative power-associative algebra

    Returns:
        CubicFit when {1, X, X^2} is independent, otherwise DegenerateFlag carrying
        the minimal linear dependency among 1, X, X^2

    Raises:
        AlgebraConstructionError: If X^3 is not in the span of X^2, X and 1,
            which happens outside cubic Jordan algebras

    Examples:
        >>> A = albert_algebra(cayley_good_basis())
        >>> cubic_fit(A.basis("E1"))
        DegenerateFlag(...)
    """
    alg = x.owner
    one = alg.one()
    x2 = jordan_power(x, 2)
    x3 = jordan_power(x, 3)
    unit = CycScalar.one(alg.conductor)

    if x.is_zero:
        return DegenerateFlag({"X": unit})
    c = x.is_multiple_of(one)
    if c is not None:
        return DegenerateFlag({"1": -c, "X": unit})
    coeffs = express([x.vec, one.vec], x2.vec, alg.dim)
    if coeffs is not None:
        zero = CycScalar.zero(alg.conductor)
        return DegenerateFlag(
            {"1": -coeffs.get(1, zero), "X": -coeffs.get(0, zero), "X2": unit}
        )
    coeffs = express([x2.vec, x.vec, one.vec], x3.vec, alg.dim)
    if coeffs is None:
        raise AlgebraConstructionError(f"{alg.name} has no cubic relation for {x}")
    zero = CycScalar.zero(alg.conductor)
    return CubicFit(coeffs.get(0, zero), -coeffs.get(1, zero), coeffs.get(2, zero))
