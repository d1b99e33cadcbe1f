from functools import lru_cache

from pydantic import Field, ValidationInfo, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Numerical defaults loaded from environment variables or defaults."""

    app_name: str = Field(default="meanbounds")
    log_level: str = Field(default="INFO", description="Root log level used by the CLI.")
    seed: int = Field(default=42, description="Seed of every randomized sweep.")
    n_samples: int = Field(
        default=10_000,
        description="Number of (a, b) pairs evaluated per containment sweep.",
    )
    x_min: float = Field(
        default=1e-4,
        description="Lower end of the log-uniform x = |ln(a/b)| sampling range.",
    )
    x_max: float = Field(
        default=40.0,
        description="Upper end of the log-uniform x sampling range.",
    )
    tolerance: float = Field(
        default=1e-12,
        description="Slack used when deciding whether a sample violates a bound.",
    )
    workers: int = Field(
        default=1,
        description="Thread workers used by partitioned sweeps. Results do not depend on it.",
    )
    chunk_size: int = Field(
        default=1024,
        description="Samples per seeded substream. Fixed so that chunking is worker independent.",
    )
    witness_eps: float = Field(
        default=1e-3,
        description="Normalized x at which the near witness pair is placed.",
    )
    witness_far: float = Field(
        default=40.0,
        description="Normalized x at which the far witness pair is placed.",
    )
    series_cutoff: float = Field(
        default=1e-4,
        description="Below this |ln(a/b)| ratios switch to their even-power series.",
    )
    golden_max_iter: int = Field(
        default=200,
        description="Iteration cap of the golden-section search.",
    )
    multistart: int = Field(
        default=8,
        description="Number of brackets scanned by the multi-start extremum search.",
    )

    class Config:
        env_prefix = "MEANBOUNDS_"
        case_sensitive = False

    @field_validator("seed", "n_samples", "workers", "chunk_size", mode="before")
    @classmethod
    def _blank_int_is_default(cls, value: object, info: ValidationInfo) -> object:
        if isinstance(value, str) and not value.strip():
            return cls.model_fields[info.field_name].default
        return value

    @field_validator("x_min", "x_max", "tolerance", "witness_eps", "witness_far", "series_cutoff")
    @classmethod
    def _positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("must be positive")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return cached settings instance."""

    return Settings()
