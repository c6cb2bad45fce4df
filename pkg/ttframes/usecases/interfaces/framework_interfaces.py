from abc import ABC, abstractmethod
from typing import Any, Dict, List

from ttframes.entities.tensor_entities import TensorSystem


class SystemLoaderInterface(ABC):
    """Abstract interface for obtaining tensor systems."""

    @abstractmethod
    def load(self, text: str) -> TensorSystem:
        """Parse a system-description document."""
        pass

    @abstractmethod
    def load_file(self, path: str) -> TensorSystem:
        """Read and parse a document from disk."""
        pass

    @abstractmethod
    def builtin(self, name: str) -> TensorSystem:
        """Return a shipped example system by name."""
        pass

    @abstractmethod
    def builtin_names(self) -> List[str]:
        """Names accepted by builtin()."""
        pass


class DocumentEmitterInterface(ABC):
    """Abstract interface for rendering result documents."""

    @abstractmethod
    def render(self, kind: str, document: Dict[str, Any]) -> str:
        """Render one document of the given kind as text."""
        pass
