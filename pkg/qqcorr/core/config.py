"""Application configuration using Pydantic settings."""

from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="QQCORR_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="qqcorr")
    app_version: str = Field(default="1.0.0")
    app_env: str = Field(default="development")

    # Logging
    log_level: str = Field(default="WARNING")
    log_format: str = Field(default="json")

    # Numerical tolerances
    hermitian_tolerance: float = Field(default=1e-10)
    trace_tolerance: float = Field(default=1e-10)
    psd_tolerance: float = Field(default=1e-10)
    jacobi_tolerance: float = Field(default=1e-13)
    jacobi_max_sweeps: int = Field(default=64)
    probability_floor: float = Field(default=1e-14)
    discord_clamp_window: float = Field(default=1e-8)
    exponent_clamp: float = Field(default=700.0)

    # Measurement optimizer
    coarse_theta_points: int = Field(default=64)
    coarse_phi_points: int = Field(default=128)
    refine_starts: int = Field(default=4)
    refine_xatol: float = Field(default=1e-9)
    refine_fatol: float = Field(default=1e-12)
    refine_max_iter: int = Field(default=400)

    # Dense-grid oracle
    dense_theta_points: int = Field(default=721)
    dense_phi_points: int = Field(default=1440)
    dense_chunk_rows: int = Field(default=16)

    # Sweeps
    default_steps: int = Field(default=200)
    default_axis_max: float = Field(default=10.0)
    sweep_workers: int = Field(default=1)

    @field_validator(
        "hermitian_tolerance",
        "trace_tolerance",
        "psd_tolerance",
        "jacobi_tolerance",
        "probability_floor",
        "discord_clamp_window",
        "refine_xatol",
        "refine_fatol",
    )
    @classmethod
    def check_positive_tolerance(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("tolerances must be positive")
        return v

    @field_validator(
        "coarse_theta_points",
        "coarse_phi_points",
        "dense_theta_points",
        "dense_phi_points",
        "default_steps",
    )
    @classmethod
    def check_grid_size(cls, v: int) -> int:
        if v < 2:
            raise ValueError("grid sizes must be at least 2")
        return v

    @field_validator("refine_starts", "sweep_workers", "dense_chunk_rows", "jacobi_max_sweeps")
    @classmethod
    def check_at_least_one(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("log_format")
    @classmethod
    def check_log_format(cls, v: str) -> str:
        v = v.lower()
        if v not in ("json", "console"):
            raise ValueError("log_format must be 'json' or 'console'")
        return v


@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
