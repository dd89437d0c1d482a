"""
Base class for serializable workbench artifacts.

This module defines the abstract base class that algebras, gradings, groups and
automorphisms implement, giving every stored object the same canonical JSON
interface.
"""

import json
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Type, TypeVar, Union

from ..exceptions import SerializationError

logger = logging.getLogger(__name__)

ArtifactT = TypeVar("ArtifactT", bound="Artifact")


def canonical_json(data: Any) -> str:
    """
    Encode data as byte-stable JSON.

    Args:
        data: JSON-compatible structure

    Returns:
        JSON string with sorted keys and no insignificant whitespace
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


class Artifact(ABC):
    """
    Abstract base class for all JSON-serializable workbench objects.

    Subclasses implement ``to_dict`` and ``from_dict``; everything else
    (canonical text, file persistence) is shared.
    """

    kind: str = "artifact"

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """
        Encode the object as a JSON-compatible dictionary.

        Returns:
            Dictionary representation
        """
        pass

    @classmethod
    @abstractmethod
    def from_dict(cls: Type[ArtifactT], data: Dict[str, Any], **context: Any) -> ArtifactT:
        """
        Decode an object produced by ``to_dict``.

        Args:
            data: Dictionary representation
            **context: Objects the encoding refers to by name (e.g. the owning algebra)

        Returns:
            Decoded object

        Raises:
            SerializationError: If the data is malformed
        """
        pass

    def to_json(self) -> str:
        """
        Canonical JSON text of the object.

        Returns:
            JSON string
        """
        return canonical_json(self.to_dict())

    @classmethod
    def from_json(cls: Type[ArtifactT], text: str, **context: Any) -> ArtifactT:
        """
        Decode an object from JSON text.

        Args:
            text: JSON produced by ``to_json``
            **context: Forwarded to ``from_dict``

        Returns:
            Decoded object

        Raises:
            SerializationError: If the text is not valid JSON for this kind
        """
        try:
            data = json.loads(text)
        except ValueError as e:
            raise SerializationError(f"Invalid JSON for {cls.__name__}: {str(e)}") from e
        try:
            return cls.from_dict(data, **context)
        except (KeyError, TypeError, ValueError) as e:
            raise SerializationError(f"Malformed {cls.__name__} data: {str(e)}") from e

    def save(self, path: Union[str, Path]) -> Path:
        """
        Write the canonical JSON to a file.

        Args:
            path: Destination file

        Returns:
            The written path
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n")
        logger.debug(f"Saved {self.__class__.__name__} to {path}")
        return path

    @classmethod
    def load(cls: Type[ArtifactT], path: Union[str, Path], **context: Any) -> ArtifactT:
        """
        Read an object from a JSON file.

        Args:
            path: Source file
            **context: Forwarded to ``from_dict``

        Returns:
            Decoded object
        """
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as e:
            raise SerializationError(f"Cannot read {path}: {str(e)}") from e
        return cls.from_json(text, **context)

    def __repr__(self) -> str:
        """
        String representation of the artifact.

        Returns:
            String representation
        """
        name = getattr(self, "name", None)
        return f"<{self.__class__.__name__} name={name}>"
