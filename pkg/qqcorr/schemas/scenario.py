"""Noise scenario schemas."""

from enum import Enum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field

# Dimensionless product t * Gamma for one subsystem.
DecayInput = Annotated[float, Field(ge=0.0, allow_inf_nan=False)]

StateParameter = Annotated[float, Field(ge=0.0, le=0.5, allow_inf_nan=False)]


class NoiseKind(str, Enum):
    """Noise family."""
    DEPHASING = "dephasing"
    AMPLITUDE = "amplitude"


class Coupling(str, Enum):
    """Which subsystems see their own environment."""
    QUBIT = "qubit"
    QUTRIT = "qutrit"
    MULTILOCAL = "multilocal"


class QutritDephasingConvention(str, Enum):
    """
    How the qutrit dephasing coherence factor depends on t * Gamma_B.

    RECONCILED uses g = exp(-t Gamma_B): identity at t = 0, full dephasing
    as t grows. LITERAL uses g = 1 - exp(-t Gamma_B) exactly as the channel
    parameter is usually quoted, which is fully dephasing at t = 0.
    """
    RECONCILED = "reconciled"
    LITERAL = "literal"


class CouplingScenario(BaseModel):
    """Noise kind, coupling and the decay products for both subsystems."""

    model_config = ConfigDict(frozen=True)

    noise: NoiseKind
    coupling: Coupling
    t_gamma_a: DecayInput = 0.0
    t_gamma_b: DecayInput = 0.0
    qutrit_dephasing: QutritDephasingConvention = QutritDephasingConvention.RECONCILED

    @property
    def acts_on_qubit(self) -> bool:
        return self.coupling in (Coupling.QUBIT, Coupling.MULTILOCAL)

    @property
    def acts_on_qutrit(self) -> bool:
        return self.coupling in (Coupling.QUTRIT, Coupling.MULTILOCAL)

    @property
    def label(self) -> str:
        return f"{self.noise.value}:{self.coupling.value}"
