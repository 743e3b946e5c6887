"""Correlation measure schemas."""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

TWO_PI = 2.0 * math.pi


class MeasurementAngles(BaseModel):
    """Bloch-sphere direction n = (sin t cos f, sin t sin f, cos t) of a qubit measurement."""

    model_config = ConfigDict(frozen=True)

    theta: float = Field(ge=0.0, le=math.pi)
    phi: float = Field(ge=0.0, lt=TWO_PI)

    @classmethod
    def from_any(cls, theta: float, phi: float) -> "MeasurementAngles":
        """
        Map arbitrary real angles onto the canonical ranges without changing n.

        Args:
            theta: Polar angle in radians, any real value
            phi: Azimuth in radians, any real value

        Returns:
            MeasurementAngles: same direction with theta in [0, pi], phi in [0, 2 pi)
        """
        theta = math.fmod(theta, TWO_PI)
        if theta < 0.0:
            theta += TWO_PI
        if theta > math.pi:
            theta = TWO_PI - theta
            phi += math.pi
        phi = math.fmod(phi, TWO_PI)
        if phi < 0.0:
            phi += TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        return cls(theta=min(max(theta, 0.0), math.pi), phi=phi)

    def flipped(self) -> "MeasurementAngles":
        """Antipodal direction (theta, phi) -> (pi - theta, phi + pi); swaps the two projectors."""
        return MeasurementAngles.from_any(math.pi - self.theta, self.phi + math.pi)

    def folded(self) -> "MeasurementAngles":
        """Representative in the upper hemisphere theta <= pi/2."""
        return self.flipped() if self.theta > 0.5 * math.pi else self


class CorrelationReport(BaseModel):
    """Entanglement and correlation measures for one state, in bits where applicable."""

    model_config = ConfigDict(frozen=True)

    negativity: float = Field(ge=0.0)
    mutual_information: float = Field(ge=0.0)
    classical_correlation: float = Field(ge=0.0)
    discord: float = Field(ge=-1e-8)
    argmin: MeasurementAngles

    @model_validator(mode="after")
    def check_discord_consistency(self) -> "CorrelationReport":
        expected = self.mutual_information - self.classical_correlation
        if abs(self.discord - expected) > 1e-12:
            raise ValueError(
                f"discord {self.discord!r} != mutual_information - classical_correlation {expected!r}"
            )
        return self
