"""Kraus channel model."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from qqcorr.core.cmatrix import ComplexMatrix, Subsystem, as_matrix, dagger
from qqcorr.core.errors import DimensionError


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """
    Ordered Kraus operators acting on one subsystem (dim 2 or 3) or on the
    full composite (dim 6, after lifting).
    """

    operators: Tuple[ComplexMatrix, ...]
    dim: int
    label: str

    def __post_init__(self):
        if not self.operators:
            raise DimensionError("a Kraus channel needs at least one operator")
        ops = []
        for op in self.operators:
            m = as_matrix(op)
            if m.shape != (self.dim, self.dim):
                raise DimensionError(
                    f"Kraus operator of shape {m.shape} in a channel of dim {self.dim}"
                )
            m.setflags(write=False)
            ops.append(m)
        object.__setattr__(self, "operators", tuple(ops))

    @classmethod
    def identity(cls, subsystem: Subsystem) -> "KrausChannel":
        """The do-nothing channel on one subsystem."""
        return cls(
            operators=(np.eye(subsystem.dim, dtype=np.complex128),),
            dim=subsystem.dim,
            label=f"identity:{subsystem.value}",
        )

    def completeness_defect(self) -> float:
        """Largest entry of ``sum_i E_i^dagger E_i - I``."""
        total = sum(dagger(op) @ op for op in self.operators)
        return float(np.max(np.abs(total - np.eye(self.dim))))

    def apply(self, rho: ComplexMatrix) -> ComplexMatrix:
        """``sum_i E_i rho E_i^dagger``."""
        if rho.shape != (self.dim, self.dim):
            raise DimensionError(
                f"channel of dim {self.dim} cannot act on shape {rho.shape}"
            )
        return sum(op @ rho @ dagger(op) for op in self.operators)

    def __len__(self) -> int:
        return len(self.operators)
