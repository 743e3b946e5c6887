"""Closed-form oracle comparison schemas."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator


class Reconciliation(str, Enum):
    """Reading of the exponent in the closed-form dephasing expressions."""
    AS_PRINTED = "as-printed"
    EXPONENT_RECONCILED = "exponent-reconciled"


class OracleComparison(BaseModel):
    """One closed-form value against the numerical pipeline at one (p, t) point."""

    model_config = ConfigDict(frozen=True)

    quantity: str
    p: float
    t_gamma_a: float
    reconciliation: Reconciliation
    analytic_value: Optional[float]
    numeric_value: float
    abs_diff: Optional[float]
    note: str = ""

    @model_validator(mode="after")
    def check_abs_diff(self) -> "OracleComparison":
        if self.analytic_value is None:
            if self.abs_diff is not None:
                raise ValueError("abs_diff must be empty when the analytic value is undefined")
            return self
        expected = abs(self.analytic_value - self.numeric_value)
        if self.abs_diff is None or abs(self.abs_diff - expected) > 1e-15 * max(1.0, expected):
            raise ValueError("abs_diff must equal |analytic_value - numeric_value|")
        return self
