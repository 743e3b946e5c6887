"""Density-matrix model for the qubit-qutrit composite."""

from typing import Tuple

from qqcorr.core.cmatrix import QUBIT_QUTRIT_DIMS
from qqcorr.models.base import MatrixModel


class DensityMatrix(MatrixModel):
    """
    A 6x6 operator on qubit (x) qutrit in the qubit-major basis.

    Construction only checks the shape. Hermiticity, trace and positivity
    are reported by :func:`qqcorr.services.states.validate`.
    """

    shape = (6, 6)

    @property
    def dims(self) -> Tuple[int, int]:
        return QUBIT_QUTRIT_DIMS
