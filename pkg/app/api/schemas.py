from __future__ import annotations

import math
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from app.core.config import Settings, get_settings
from app.core.enums import VerifyTarget


class SampleConfig(BaseModel):
    seed: int = 42
    n_samples: int = Field(default=10_000, ge=0)
    x_min: float = Field(default=1e-4, gt=0)
    x_max: float = Field(default=40.0, gt=0)
    tolerance: float = Field(default=1e-12, gt=0)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=1024, ge=1)

    @model_validator(mode="after")
    def _ordered_range(self) -> "SampleConfig":
        if not self.x_min < self.x_max:
            raise ValueError(f"x_min must be below x_max, got {self.x_min} >= {self.x_max}")
        return self

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **overrides: object) -> "SampleConfig":
        settings = settings or get_settings()
        values = {
            "seed": settings.seed,
            "n_samples": settings.n_samples,
            "x_min": settings.x_min,
            "x_max": settings.x_max,
            "tolerance": settings.tolerance,
            "workers": settings.workers,
            "chunk_size": settings.chunk_size,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


Witness = Dict[str, float]


class VerificationReport(BaseModel):
    label: str = ""
    checked: int = 0
    violations: int = 0
    worst_margin: float = math.inf
    min_observed: float = math.inf
    max_observed: float = -math.inf
    witness_min: Optional[Witness] = None
    witness_max: Optional[Witness] = None
    inapplicable: bool = False
    notes: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and not self.inapplicable

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine two partial reports; ties keep the left witness."""

        take_min = other.min_observed < self.min_observed
        take_max = other.max_observed > self.max_observed
        return VerificationReport(
            label=self.label or other.label,
            checked=self.checked + other.checked,
            violations=self.violations + other.violations,
            worst_margin=min(self.worst_margin, other.worst_margin),
            min_observed=other.min_observed if take_min else self.min_observed,
            max_observed=other.max_observed if take_max else self.max_observed,
            witness_min=other.witness_min if take_min else self.witness_min,
            witness_max=other.witness_max if take_max else self.witness_max,
            inapplicable=self.inapplicable or other.inapplicable,
            notes=self.notes + other.notes,
        )

    def to_lines(self) -> Iterator[str]:
        if self.label:
            yield f"target={self.label}"
        yield f"checked={self.checked}"
        yield f"violations={self.violations}"
        yield f"worst_margin={_fmt(self.worst_margin)}"
        yield f"min={_fmt(self.min_observed)}"
        yield f"max={_fmt(self.max_observed)}"
        yield f"witness_min={_fmt_witness(self.witness_min)}"
        yield f"witness_max={_fmt_witness(self.witness_max)}"
        if self.inapplicable:
            yield "inapplicable=true"
        for note in self.notes:
            yield f"note={note}"


def _fmt(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(float(value))


def _fmt_witness(witness: Optional[Witness]) -> str:
    if not witness:
        return "none"
    return ";".join(f"{key}:{_fmt(value)}" for key, value in witness.items())


class SuiteResult(BaseModel):
    target: VerifyTarget
    reports: List[VerificationReport] = Field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(report.violations for report in self.reports)

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)


class BoundsRecord(BaseModel):
    case: str
    lower: float
    upper: float
    lower_strict: bool = True
    upper_strict: bool = True
    sharp: bool

    def to_line(self) -> str:
        return (
            f"case={self.case} lower={_fmt(self.lower)} upper={_fmt(self.upper)} "
            f"sharp={str(self.sharp).lower()} strict={_strict_tag(self.lower_strict, self.upper_strict)}"
        )


def _strict_tag(lower: bool, upper: bool) -> str:
    return "both" if lower and upper else ("lower" if lower else ("upper" if upper else "none"))


class SweepGrid(BaseModel):
    r_range: Tuple[float, float, int] = (-2.0, 3.0, 51)
    q_range: Tuple[float, float, int] = (-2.0, 3.0, 51)
    output_path: Path

    @model_validator(mode="after")
    def _steps(self) -> "SweepGrid":
        for name, (low, high, steps) in (("r", self.r_range), ("q", self.q_range)):
            if steps < 2:
                raise ValueError(f"{name} steps must be at least 2")
            if not low < high:
                raise ValueError(f"{name} range must be increasing")
        return self
