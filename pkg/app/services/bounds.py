"""Bound pairs for ratios of differences of power means.

Each public function either returns a :class:`BoundPair` or raises
:class:`NotCoveredError` naming the condition that failed. Parameters in the
gap between the covered branches are never extrapolated.
"""

from __future__ import annotations

import logging
import math
from typing import Optional, Tuple

from app.core.config import get_settings
from app.core.enums import Corollary32Case, Theorem31Case
from app.core.errors import DomainError, NotCoveredError
from app.core.types import BoundPair, ExponentTriple, PositivePair, QuadExponents, RQPoint
from app.services import kernels, regions, stable

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)


def _two_power(exponent: float) -> float:
    return 2.0 ** exponent


def theorem31_bounds(params: ExponentTriple) -> BoundPair:
    """Sharp bounds of (M_s^p - G^p)/(M_t^p - G^p) for the covered branches."""

    selection = regions.theorem31_case(params)
    if not selection.covered:
        raise NotCoveredError(selection.reason)
    s, t, p = params.s, params.t, params.p
    ratio = s / t
    power = _two_power(p / t - p / s)
    case = selection.case
    if case is Theorem31Case.A_UPPER:
        pair = (power, ratio)
    elif case is Theorem31Case.A_LOWER:
        pair = (ratio, min(1.0, power))
    elif case is Theorem31Case.B_UPPER:
        pair = (max(1.0, power), ratio)
    elif case is Theorem31Case.B_LOWER:
        pair = (ratio, power)
    elif case is Theorem31Case.C_UPPER:
        pair = (ratio, 0.0)
    else:
        pair = (-math.inf, ratio)
    logger.debug("theorem31 bounds case=%s lower=%s upper=%s", case.value, pair[0], pair[1])
    return BoundPair(lower=pair[0], upper=pair[1], sharp=True)


def corollary32_bounds(s: float, t: float) -> BoundPair:
    """Sharp bounds of (M_s - G)/(M_t - G)."""

    case = regions.corollary32_case(s, t)
    ratio = s / t
    power = _two_power(1.0 / t - 1.0 / s)
    if case is Corollary32Case.A:
        pair = (1.0, ratio)
    elif case is Corollary32Case.B:
        pair = (ratio, 0.0)
    elif case in (Corollary32Case.C_I, Corollary32Case.C_II):
        pair = (power, ratio)
    elif case in (Corollary32Case.D_I, Corollary32Case.D_II, Corollary32Case.D_III):
        pair = (ratio, power)
    else:
        raise NotCoveredError(f"no p=1 case applies to s={s:g} t={t:g}")
    return BoundPair(lower=pair[0], upper=pair[1], sharp=True)


def wu_debnath_bounds(s: float) -> BoundPair:
    """Bounds of (M_s - G)/(A - G), the t = 1, p = 1 instance."""

    if s == 0 or not math.isfinite(s):
        raise DomainError(f"s must be finite and nonzero, got {s!r}")
    if s in (0.5, 1.0):
        raise NotCoveredError(f"the ratio is constant at s={s:g}")
    power = _two_power(1.0 - 1.0 / s)
    if s < 0:
        return BoundPair(lower=s, upper=0.0, sharp=True)
    if 0.5 < s < 1:
        return BoundPair(lower=s, upper=power, sharp=True)
    return BoundPair(lower=power, upper=s, sharp=True)


def wu_prior_bounds(r: float) -> BoundPair:
    """The earlier, non-sharp bounds 2^(1-1/r) and (2r/(1-r))^(1-1/r) of (M_r - G)/(A - G), 0 < r < 1/2."""

    if not math.isfinite(r) or r == 0:
        raise DomainError(f"r must be finite and nonzero, got {r!r}")
    if not 0 < r < 0.5:
        raise NotCoveredError(f"the earlier bound needs 0 < r < 1/2, got r={r:g}")
    exponent = 1.0 - 1.0 / r
    return BoundPair(lower=_two_power(exponent), upper=(2.0 * r / (1.0 - r)) ** exponent, sharp=False)


def theorem33_bounds(params: QuadExponents) -> BoundPair:
    """Bounds of (M_r^p - M_s^p)/(M_t^p - M_s^p) under 0 < p <= (4t + 2s)/3."""

    if not regions.theorem33_applicable(params):
        raise NotCoveredError(
            f"condition p <= (4t+2s)/3 violated: p={params.p:g} > {(4 * params.t + 2 * params.s) / 3:g}"
        )
    r, s, t, p = params.r, params.s, params.t, params.p
    lower = float(stable.expm1_ratio(LN2 * (p / s - p / r), LN2 * (p / s - p / t)))
    upper = (r - s) / (t - s)
    return BoundPair(lower=lower, upper=upper, sharp=False)


def theorem33_limit_bounds(r: float, p: float) -> BoundPair:
    """Bounds of (M_r^p - G^p)/(A^p - G^p), the s -> 0+, t = 1 limit.

    Valid for r > 1 and 0 < p <= 4/3; both inequalities are non-strict.
    """

    if not r > 1:
        raise NotCoveredError(f"expected r > 1, got r={r:g}")
    if not 0 < p <= 4.0 / 3.0:
        raise NotCoveredError(f"expected 0 < p <= 4/3, got p={p:g}")
    return BoundPair(
        lower=_two_power(p - p / r),
        upper=r,
        lower_strict=False,
        upper_strict=False,
        sharp=False,
    )


def theorem31_endpoint_limits(params: ExponentTriple) -> Tuple[float, float]:
    """(limit as a/b -> 1, limit as a/b -> inf) of the ratio, from F_{s/t, p/t}."""

    return kernels.f_limits(RQPoint(params.s / params.t, params.p / params.t))


def bound_limit_witnesses(
    params: ExponentTriple,
    eps: Optional[float] = None,
    far: Optional[float] = None,
) -> Tuple[PositivePair, PositivePair]:
    """Pairs with ab = 1 placed at x = eps and x = far in the normalized variable x = |t| ln a.

    The first pair approaches the s/t endpoint, the second the other endpoint.
    """

    selection = regions.theorem31_case(params)
    if not selection.covered:
        raise NotCoveredError(selection.reason)
    settings = get_settings()
    eps = settings.witness_eps if eps is None else eps
    far = settings.witness_far if far is None else far
    scale = abs(params.t)
    try:
        near_pair = PositivePair.from_log_ratio(eps / scale)
        far_pair = PositivePair.from_log_ratio(far / scale)
    except OverflowError as exc:
        raise DomainError(f"witness pair overflows for |t|={scale:g} far={far:g}") from exc
    return near_pair, far_pair
