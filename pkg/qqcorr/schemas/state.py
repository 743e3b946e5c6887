"""Density-matrix diagnostic schemas."""

from pydantic import BaseModel, ConfigDict


class ValidityReport(BaseModel):
    """Outcome of a density-matrix hygiene check."""

    model_config = ConfigDict(frozen=True)

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float
    hermitian_ok: bool
    trace_ok: bool
    psd_ok: bool

    @property
    def passed(self) -> bool:
        return self.hermitian_ok and self.trace_ok and self.psd_ok

    def describe(self) -> str:
        """One-line summary of every failing check."""
        problems = []
        if not self.hermitian_ok:
            problems.append(f"hermiticity defect {self.hermiticity_defect:.3e}")
        if not self.trace_ok:
            problems.append(f"trace defect {self.trace_defect:.3e}")
        if not self.psd_ok:
            problems.append(f"minimum eigenvalue {self.min_eigenvalue:.3e}")
        return "; ".join(problems) if problems else "valid"
