"""Matrix-carrying domain models."""

from qqcorr.models.base import MatrixModel
from qqcorr.models.channel import KrausChannel
from qqcorr.models.state import DensityMatrix

__all__ = ["MatrixModel", "KrausChannel", "DensityMatrix"]
