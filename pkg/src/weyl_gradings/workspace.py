"""
On-disk workspace for algebras, gradings, automorphisms and Weyl reports.

Objects are stored as canonical JSON under
``<directory>/{algebras,gradings,automorphisms,reports}/<name>.json``. Builtin
algebras and gradings are built on demand when they are not stored yet.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from .algebras.albert import albert_algebra, albert_nu_basis
from .algebras.base import StructAlgebra
from .algebras.cayley import cayley_cd_basis, cayley_good_basis, okubo_algebra
from .algebras.pauli import matrix_algebra_MDk, pauli_matrix_algebra
from .config import get_settings
from .core.base import canonical_json
from .exceptions import SerializationError, UnknownObjectError
from .gradings.base import Grading
from .gradings.builtin import GRADING_NAMES, builtin_grading, z33_basis
from .morphisms.base import AlgAutomorphism
from .weyl.pipeline import WeylReport

logger = logging.getLogger(__name__)

KINDS = ("algebras", "gradings", "automorphisms", "reports")

_KIND_DIRS = {
    "algebra": "algebras",
    "grading": "gradings",
    "automorphism": "automorphisms",
    "report": "reports",
}


def _pauli(l: Sequence[int] = (2,)) -> StructAlgebra:  # noqa: E741
    return pauli_matrix_algebra(tuple(l))[0]


def _matrix(l: Sequence[int] = (2,), k: int = 2) -> StructAlgebra:  # noqa: E741
    return matrix_algebra_MDk(tuple(l), k)


_ALGEBRA_BUILDERS: Dict[str, Callable[..., StructAlgebra]] = {
    "cayley": lambda: cayley_good_basis(),
    "cayley_cd": lambda: cayley_cd_basis(),
    "okubo": lambda: okubo_algebra(),
    "albert": lambda: albert_algebra(),
    "albert_cayley_cd": lambda: albert_algebra(cayley_cd_basis()),
    "albert_nu": lambda: albert_nu_basis(),
    "albert_z33_basis": lambda: z33_basis(),
    "pauli": _pauli,
    "matrix": _matrix,
}

ALGEBRA_NAMES = tuple(_ALGEBRA_BUILDERS)


def builtin_algebra(name: str, **params: Any) -> StructAlgebra:
    """
    Look up a builtin algebra.

    Args:
        name: One of ALGEBRA_NAMES, or the name of a Pauli or matrix algebra
            such as ``pauli_2x2`` or ``pauli_2_k3``
        **params: ``l`` (Pauli moduli) and ``k`` for ``pauli`` and ``matrix``

    Raises:
        UnknownObjectError: For an unknown name or bad parameters
    """
    builder = _ALGEBRA_BUILDERS.get(name)
    if builder is None and name.startswith("pauli_"):
        return _parse_pauli_name(name)
    if builder is None:
        raise UnknownObjectError(f"Unknown algebra {name!r}; known: {', '.join(ALGEBRA_NAMES)}")
    try:
        return builder(**params)
    except TypeError as e:
        raise UnknownObjectError(f"Bad parameters for algebra {name}: {str(e)}") from e


def _parse_pauli_name(name: str) -> StructAlgebra:
    body = name[len("pauli_") :]
    k = None
    if "_k" in body:
        body, k_text = body.rsplit("_k", 1)
        k = int(k_text)
    try:
        moduli = () if body == "trivial" else tuple(int(m) for m in body.split("x"))
    except ValueError as e:
        raise UnknownObjectError(f"Unknown algebra {name!r}: {str(e)}") from e
    return _pauli(moduli) if k is None else _matrix(moduli, k)


class Workspace:
    """
    A directory of stored workbench objects.

    Attributes:
        directory: Root directory (defaults to the ``workspace.directory`` setting)
    """

    def __init__(self, directory: Optional[Union[str, Path]] = None) -> None:
        self.directory = Path(directory or get_settings().workspace.directory)

    def path(self, kind: str, name: str) -> Path:
        folder = _KIND_DIRS.get(kind, kind)
        if folder not in KINDS:
            raise UnknownObjectError(f"Unknown object kind {kind!r}")
        return self.directory / folder / f"{name}.json"

    def names(self, kind: str) -> List[str]:
        folder = self.path(kind, "_").parent
        if not folder.exists():
            return []
        return sorted(p.stem for p in folder.glob("*.json"))

    def exists(self, kind: str, name: str) -> bool:
        return self.path(kind, name).exists()

    # ── Storing ──────────────────────────────────────────────────────

    def save_algebra(self, algebra: StructAlgebra) -> Path:
        return algebra.save(self.path("algebra", algebra.name))

    def save_grading(self, grading: Grading) -> Path:
        if not self.exists("algebra", grading.algebra.name):
            self.save_algebra(grading.algebra)
        return grading.save(self.path("grading", grading.name))

    def save_automorphism(self, phi: AlgAutomorphism) -> Path:
        if not self.exists("algebra", phi.algebra.name):
            self.save_algebra(phi.algebra)
        return phi.save(self.path("automorphism", phi.name))

    def save_report(self, report: WeylReport, name: Optional[str] = None) -> Path:
        path = self.path("report", name or report.grading)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(canonical_json(report.model_dump()) + "\n")
        logger.info(f"Wrote report {path}")
        return path

    # ── Loading ──────────────────────────────────────────────────────

    def _read(self, kind: str, name: str) -> Dict[str, Any]:
        path = self.path(kind, name)
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError as e:
            raise UnknownObjectError(f"No {kind} named {name!r} in {self.directory}") from e
        except ValueError as e:
            raise SerializationError(f"Invalid JSON in {path}: {str(e)}") from e
        if not isinstance(data, dict):
            raise SerializationError(f"{path} does not hold a JSON object")
        return data

    def load_algebra(self, name: str) -> StructAlgebra:
        """Stored algebra, or the builtin one of that name."""
        if self.exists("algebra", name):
            return StructAlgebra.from_dict(self._read("algebra", name))
        return builtin_algebra(name)

    def load_grading(self, name: str) -> Grading:
        """Stored grading, or the builtin one of that name."""
        if not self.exists("grading", name):
            if name in GRADING_NAMES:
                return builtin_grading(name)
            raise UnknownObjectError(f"Unknown grading {name!r}")
        data = self._read("grading", name)
        return Grading.from_dict(data, algebra=self._algebra_for(data))

    def load_automorphism(self, name: str) -> AlgAutomorphism:
        data = self._read("automorphism", name)
        return AlgAutomorphism.from_dict(data, algebra=self._algebra_for(data))

    def load_report(self, name: str) -> WeylReport:
        return WeylReport.model_validate(self._read("report", name))

    def _algebra_for(self, data: Dict[str, Any]) -> StructAlgebra:
        name = data.get("algebra")
        if not isinstance(name, str):
            raise SerializationError(f"Object {data.get('name')} does not name its algebra")
        return self.load_algebra(name)

    # ── Import and export ────────────────────────────────────────────

    def import_file(self, source: Union[str, Path]) -> Path:
        """
        Validate a JSON file and store it under its own name.

        The kind is read from the ``kind`` field; reports are recognized by
        their ``lower_order`` field.

        Raises:
            SerializationError: If the file does not decode to a valid object
        """
        path = Path(source)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError) as e:
            raise SerializationError(f"Cannot read {path}: {str(e)}") from e
        if not isinstance(data, dict):
            raise SerializationError(f"{path} does not hold a JSON object")
        kind = data.get("kind") or ("report" if "lower_order" in data else None)
        try:
            if kind == "algebra":
                algebra = StructAlgebra.from_dict(data)
                algebra.validate()
                return self.save_algebra(algebra)
            if kind == "grading":
                return self.save_grading(Grading.from_dict(data, algebra=self._algebra_for(data)))
            if kind == "automorphism":
                phi = AlgAutomorphism.from_dict(data, algebra=self._algebra_for(data))
                return self.save_automorphism(phi)
            if kind == "report":
                return self.save_report(WeylReport.model_validate(data))
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed {kind} in {path}: {str(e)}") from e
        raise SerializationError(f"{path} has unknown kind {kind!r}")

    def export(self, kind: str, name: str, out: Union[str, Path]) -> Path:
        """Copy a stored (or builtin) object to ``out`` as canonical JSON."""
        if kind in ("algebra", "algebras"):
            text = self.load_algebra(name).to_json()
        elif kind in ("grading", "gradings"):
            text = self.load_grading(name).to_json()
        elif kind in ("automorphism", "automorphisms"):
            text = self.load_automorphism(name).to_json()
        elif kind in ("report", "reports"):
            text = canonical_json(self.load_report(name).model_dump())
        else:
            raise UnknownObjectError(f"Unknown object kind {kind!r}")
        target = Path(out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text + "\n")
        logger.info(f"Exported {kind} {name} to {target}")
        return target
