"""Sweep configuration and CSV row schemas."""

from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from qqcorr.schemas.scenario import (
    Coupling,
    CouplingScenario,
    DecayInput,
    NoiseKind,
    QutritDephasingConvention,
    StateParameter,
)

CSV_COLUMNS: Tuple[str, ...] = (
    "scenario",
    "noise",
    "p",
    "t_gamma_A",
    "t_gamma_B",
    "negativity",
    "mutual_information",
    "classical_correlation",
    "discord",
    "theta_opt",
    "phi_opt",
)


class Axis(str, Enum):
    """Subsystem whose decay product varies along the sweep."""
    A = "A"
    B = "B"


class Measure(str, Enum):
    """Plottable columns of a sweep row."""
    NEGATIVITY = "negativity"
    MUTUAL_INFORMATION = "mutual_information"
    CLASSICAL_CORRELATION = "classical_correlation"
    DISCORD = "discord"


DEFAULT_MEASURES: Tuple[Measure, ...] = (Measure.NEGATIVITY, Measure.DISCORD)


class SweepSegment(BaseModel):
    """One family of curves: a coupling, the varying axis and the pinned other side."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_.:\-]+$")
    coupling: Coupling
    axis: Axis
    fixed_t_gamma: DecayInput = 0.0
    measures: Tuple[Measure, ...] = DEFAULT_MEASURES

    @field_validator("measures")
    @classmethod
    def check_measures(cls, v: Tuple[Measure, ...]) -> Tuple[Measure, ...]:
        if not v:
            raise ValueError("a segment must plot at least one measure")
        if len(set(v)) != len(v):
            raise ValueError("measures must not repeat")
        return v

    @model_validator(mode="after")
    def check_axis_matches_coupling(self) -> "SweepSegment":
        if self.coupling is Coupling.QUBIT and self.axis is not Axis.A:
            raise ValueError("qubit-only coupling sweeps t_gamma_A (axis A)")
        if self.coupling is Coupling.QUTRIT and self.axis is not Axis.B:
            raise ValueError("qutrit-only coupling sweeps t_gamma_B (axis B)")
        if self.coupling is not Coupling.MULTILOCAL and self.fixed_t_gamma != 0.0:
            raise ValueError("a fixed t_gamma only applies to multilocal coupling")
        return self

    def scenario_at(
        self,
        noise: NoiseKind,
        axis_value: float,
        qutrit_dephasing: QutritDephasingConvention = QutritDephasingConvention.RECONCILED,
    ) -> CouplingScenario:
        """Scenario for one point on this segment's axis."""
        if self.axis is Axis.A:
            t_a, t_b = axis_value, self.fixed_t_gamma
        else:
            t_a, t_b = self.fixed_t_gamma, axis_value
        return CouplingScenario(
            noise=noise,
            coupling=self.coupling,
            t_gamma_a=t_a,
            t_gamma_b=t_b,
            qutrit_dephasing=qutrit_dephasing,
        )


class SweepConfig(BaseModel):
    """Everything needed to reproduce one CSV file."""

    model_config = ConfigDict(frozen=True)

    noise: NoiseKind
    p_values: List[StateParameter] = Field(..., min_length=1)
    axis_max: float = Field(..., gt=0.0, allow_inf_nan=False)
    steps: int = Field(..., ge=2)
    segments: List[SweepSegment] = Field(default_factory=list)
    output_path: Optional[Path] = None
    plot_path: Optional[Path] = None
    figure: Optional[str] = None
    oracle_report: bool = False
    qutrit_dephasing: QutritDephasingConvention = QutritDephasingConvention.RECONCILED

    @field_validator("p_values")
    @classmethod
    def check_unique_p(cls, v: List[float]) -> List[float]:
        if len(set(v)) != len(v):
            raise ValueError(f"p values must be unique, got {v}")
        return v

    @field_validator("segments")
    @classmethod
    def check_unique_labels(cls, v: List[SweepSegment]) -> List[SweepSegment]:
        labels = [segment.label for segment in v]
        if len(set(labels)) != len(labels):
            raise ValueError(f"segment labels must be unique, got {labels}")
        return v

    @model_validator(mode="after")
    def check_something_to_do(self) -> "SweepConfig":
        if not self.segments and not self.oracle_report:
            raise ValueError("a sweep needs at least one segment unless only the oracle report is requested")
        return self

    @property
    def sweep_requested(self) -> bool:
        return bool(self.segments)

    @property
    def coupling(self) -> Coupling:
        return self.segments[0].coupling

    @property
    def axis(self) -> Axis:
        return self.segments[0].axis

    @property
    def fixed_t_gamma(self) -> float:
        return self.segments[0].fixed_t_gamma

    def axis_values(self) -> np.ndarray:
        """``steps`` equally spaced values covering [0, axis_max], both ends included."""
        return np.linspace(0.0, self.axis_max, self.steps)


class CsvRow(BaseModel):
    """One evaluated sweep point."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    scenario: str
    noise: NoiseKind
    p: float = Field(ge=0.0, le=0.5)
    t_gamma_A: float = Field(ge=0.0)
    t_gamma_B: float = Field(ge=0.0)
    negativity: float = Field(ge=0.0)
    mutual_information: float = Field(ge=0.0)
    classical_correlation: float = Field(ge=0.0)
    discord: float = Field(ge=0.0)
    theta_opt: float
    phi_opt: float

    def value(self, measure: Measure) -> float:
        return getattr(self, measure.value)
