from __future__ import annotations

import math
from dataclasses import dataclass

from app.core.errors import DomainError


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class PositivePair:
    """An element (a, b) of the domain of distinct positive reals."""

    a: float
    b: float

    def __post_init__(self) -> None:
        _require_finite("a", self.a)
        _require_finite("b", self.b)
        if self.a <= 0 or self.b <= 0:
            raise DomainError(f"pair must be positive, got a={self.a} b={self.b}")
        if self.a == self.b:
            raise DomainError(f"pair must be distinct, got a=b={self.a}")

    def swapped(self) -> "PositivePair":
        return PositivePair(self.b, self.a)

    def scaled(self, factor: float) -> "PositivePair":
        return PositivePair(self.a * factor, self.b * factor)

    def normalized(self) -> "PositivePair":
        """Rescale to ab = 1 without changing a/b."""

        root = math.exp(0.5 * (math.log(self.a) + math.log(self.b)))
        return PositivePair(self.a / root, self.b / root)

    @classmethod
    def from_log_ratio(cls, y: float) -> "PositivePair":
        """Pair with ab = 1 and a = e^y."""

        return cls(math.exp(y), math.exp(-y))


@dataclass(frozen=True)
class ExponentTriple:
    """Exponents (s, t, p) of the ratio (M_s^p - G^p)/(M_t^p - G^p)."""

    s: float
    t: float
    p: float

    def __post_init__(self) -> None:
        for name in ("s", "t", "p"):
            value = getattr(self, name)
            _require_finite(name, value)
            if value == 0:
                raise DomainError(f"{name} must be nonzero")
        if not self.s < self.t:
            raise DomainError(f"expected s < t, got s={self.s} t={self.t}")


@dataclass(frozen=True)
class QuadExponents:
    """Exponents of (M_r^p - M_s^p)/(M_t^p - M_s^p) with 0 < s < t < r and p > 0."""

    r: float
    s: float
    t: float
    p: float

    def __post_init__(self) -> None:
        for name in ("r", "s", "t", "p"):
            _require_finite(name, getattr(self, name))
        if not 0 < self.s < self.t < self.r:
            raise DomainError(f"expected 0 < s < t < r, got s={self.s} t={self.t} r={self.r}")
        if not self.p > 0:
            raise DomainError(f"expected p > 0, got p={self.p}")


@dataclass(frozen=True)
class KernelTriple:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            _require_finite(name, getattr(self, name))
        mags = (abs(self.alpha), abs(self.beta), abs(self.gamma))
        if len(set(mags)) != 3:
            raise DomainError(
                f"|alpha|, |beta|, |gamma| must be pairwise distinct, got {self.alpha}, {self.beta}, {self.gamma}"
            )


@dataclass(frozen=True)
class RQPoint:
    """A point of the (r, q) classification plane."""

    r: float
    q: float

    def __post_init__(self) -> None:
        _require_finite("r", self.r)
        _require_finite("q", self.q)
        if self.r in (0, 1):
            raise DomainError(f"r must avoid 0 and 1, got r={self.r}")
        if self.q == 0:
            raise DomainError("q must be nonzero")

    @classmethod
    def is_excluded(cls, r: float, q: float) -> bool:
        return r in (0, 1) or q == 0


@dataclass(frozen=True)
class BoundPair:
    """Lower/upper bound of a ratio. ``lower`` may be -inf."""

    lower: float
    upper: float
    lower_strict: bool = True
    upper_strict: bool = True
    sharp: bool = True

    def __post_init__(self) -> None:
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise DomainError("bounds must not be NaN")
        if not self.lower < self.upper:
            raise DomainError(f"expected lower < upper, got {self.lower} >= {self.upper}")

    def margin(self, value: float, slack: float = 0.0) -> float:
        """Distance of ``value`` inside the bounds widened by ``slack``.

        The slack is absolute for endpoints in [-1, 1] and relative beyond.
        """

        def widen(bound: float) -> float:
            return slack * max(1.0, abs(bound)) if math.isfinite(bound) else 0.0

        low = value - self.lower + widen(self.lower)
        high = self.upper - value + widen(self.upper)
        return min(low, high)

    def contains(self, value: float, slack: float = 0.0) -> bool:
        low_ok = _side_ok(value - self.lower, self.lower, slack, self.lower_strict)
        high_ok = _side_ok(self.upper - value, self.upper, slack, self.upper_strict)
        return low_ok and high_ok


def _side_ok(gap: float, bound: float, slack: float, strict: bool) -> bool:
    if not math.isfinite(bound):
        return not math.isnan(gap)
    gap += slack * max(1.0, abs(bound))
    return gap > 0 if strict else gap >= 0
