"""Base class for matrix-carrying domain models."""

from typing import Any, ClassVar, Dict, Optional, Tuple

import numpy as np

from qqcorr.core.cmatrix import ComplexMatrix, as_matrix
from qqcorr.core.errors import DimensionError


class MatrixModel:
    """Immutable holder of one complex matrix with an optional fixed shape."""

    shape: ClassVar[Optional[Tuple[int, int]]] = None

    __slots__ = ("_matrix",)

    def __init__(self, matrix: ComplexMatrix):
        m = as_matrix(matrix)
        if self.shape is not None and m.shape != self.shape:
            raise DimensionError(
                f"{self.__class__.__name__} needs shape {self.shape}, got {m.shape}"
            )
        m.setflags(write=False)
        self._matrix = m

    @property
    def matrix(self) -> ComplexMatrix:
        """Read-only view of the underlying array."""
        return self._matrix

    def to_dict(self) -> Dict[str, Any]:
        """Convert model to a JSON-friendly dictionary."""
        return {
            "shape": list(self._matrix.shape),
            "real": self._matrix.real.tolist(),
            "imag": self._matrix.imag.tolist(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixModel):
            return NotImplemented
        return type(self) is type(other) and np.array_equal(self._matrix, other._matrix)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        """String representation of model."""
        rows, cols = self._matrix.shape
        return f"<{self.__class__.__name__}({rows}x{cols})>"
