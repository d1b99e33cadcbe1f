"""Two-argument means and the ratio-of-differences quantities built from them.

Every pair is first written as a = G e^y, b = G e^-y with G = sqrt(ab), so
that M_r = G cosh(r y)^(1/r), A = G cosh y and I = G exp(y coth y - 1). The
ratios are homogeneous of degree 0, so G cancels and only y = ln(a/b)/2
enters.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from app.core.config import get_settings
from app.core.errors import DomainError
from app.core.types import ExponentTriple, PositivePair, QuadExponents
from app.services import stable

logger = logging.getLogger(__name__)


def half_log_ratio(a, b):
    """y = ln(a/b)/2, computed from a/b when that quotient is representable."""

    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        quotient = a / b
        ok = np.isfinite(quotient) & (quotient > 0)
        direct = np.log(np.where(ok, quotient, 1.0))
    return 0.5 * np.where(ok, direct, np.log(a) - np.log(b))


def _log_geometric(a, b):
    return 0.5 * (np.log(np.asarray(a, dtype=float)) + np.log(np.asarray(b, dtype=float)))


def _check_many(a, b) -> None:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise DomainError("pairs must be finite")
    if np.any(a <= 0) or np.any(b <= 0):
        raise DomainError("pairs must be positive")


def _check_distinct(a, b) -> None:
    if np.any(np.asarray(a) == np.asarray(b)):
        raise DomainError("ratio is 0/0 at a = b")


def power_mean(order: float, pair: PositivePair) -> float:
    """((a^r + b^r)/2)^(1/r), and sqrt(ab) at r = 0."""

    if not math.isfinite(order):
        raise DomainError(f"order must be finite, got {order!r}")
    return float(power_mean_many(order, pair.a, pair.b))


def power_mean_many(order: float, a, b):
    _check_many(a, b)
    y = half_log_ratio(a, b)
    log_mean = _log_geometric(a, b) + stable.log_cosh_over(order, y)
    return stable.as_output(np.exp(log_mean), log_mean)


def geometric_mean(pair: PositivePair) -> float:
    return power_mean(0.0, pair)


def arithmetic_mean(pair: PositivePair) -> float:
    return power_mean(1.0, pair)


def identric_mean(pair: PositivePair) -> float:
    """(1/e)(a^a/b^b)^(1/(a-b)) as G exp(y coth y - 1)."""

    y = half_log_ratio(pair.a, pair.b)
    log_mean = _log_geometric(pair.a, pair.b) + stable.xcoth_minus_one(y)
    return float(np.exp(log_mean))


def _gap_ratio(p: float, num_orders: tuple[float, float], den_orders: tuple[float, float], y):
    """(e^(p*gap_num) - 1)/(e^(p*gap_den) - 1) for log-mean gaps in y."""

    cutoff = 0.5 * get_settings().series_cutoff
    num = p * stable.log_cosh_gap(num_orders[0], num_orders[1], y, cutoff)
    den = p * stable.log_cosh_gap(den_orders[0], den_orders[1], y, cutoff)
    return stable.expm1_ratio(num, den)


def ratio_rho(params: ExponentTriple, pair: PositivePair) -> float:
    """(M_s^p - G^p)/(M_t^p - G^p)."""

    return float(ratio_rho_many(params, pair.a, pair.b))


def ratio_rho_many(params: ExponentTriple, a, b):
    _check_many(a, b)
    _check_distinct(a, b)
    y = half_log_ratio(a, b)
    out = _gap_ratio(params.p, (params.s, 0.0), (params.t, 0.0), y)
    return stable.as_output(out, y)


def ratio_general(params: QuadExponents, pair: PositivePair) -> float:
    """(M_r^p - M_s^p)/(M_t^p - M_s^p)."""

    return float(ratio_general_many(params, pair.a, pair.b))


def ratio_general_many(params: QuadExponents, a, b):
    _check_many(a, b)
    _check_distinct(a, b)
    y = half_log_ratio(a, b)
    out = _gap_ratio(params.p, (params.r, params.s), (params.t, params.s), y)
    return stable.as_output(out, y)


def intro_ratio(p: float, pair: PositivePair) -> float:
    """(I^p - G^p)/(A^p - G^p)."""

    return float(intro_ratio_many(p, pair.a, pair.b))


def intro_ratio_many(p: float, a, b):
    if p == 0 or not math.isfinite(p):
        raise DomainError(f"p must be finite and nonzero, got {p!r}")
    _check_many(a, b)
    _check_distinct(a, b)
    y = half_log_ratio(a, b)
    return stable.as_output(_intro_from_half_log(p, y), y)


def _intro_from_half_log(p: float, y):
    num = p * stable.xcoth_minus_one(y)
    den = p * stable.log_cosh_gap(1.0, 0.0, y, 0.5 * get_settings().series_cutoff)
    return stable.expm1_ratio(num, den)


def normalized_ratio_rho(params: ExponentTriple, y):
    """ratio_rho on pairs with ab = 1 and ln a = y."""

    y = np.asarray(y, dtype=float)
    if np.any(y == 0):
        raise DomainError("ratio is 0/0 at a = b")
    return stable.as_output(_gap_ratio(params.p, (params.s, 0.0), (params.t, 0.0), y), y)


def normalized_ratio_general(params: QuadExponents, y):
    y = np.asarray(y, dtype=float)
    if np.any(y == 0):
        raise DomainError("ratio is 0/0 at a = b")
    out = _gap_ratio(params.p, (params.r, params.s), (params.t, params.s), y)
    return stable.as_output(out, y)


def normalized_intro_ratio(p: float, y):
    if p == 0 or not math.isfinite(p):
        raise DomainError(f"p must be finite and nonzero, got {p!r}")
    y = np.asarray(y, dtype=float)
    if np.any(y == 0):
        raise DomainError("ratio is 0/0 at a = b")
    return stable.as_output(_intro_from_half_log(p, y), y)


def mean_gap_ratio_many(num_order: float, den_order: float, p: float, a, b):
    """(M_num^p - G^p)/(M_den^p - G^p) without any ordering of the two orders.

    With den_order = 1 and p = 1 this is (M_s - G)/(A - G).
    """

    if num_order == 0 or den_order == 0 or p == 0:
        raise DomainError("orders and p must be nonzero")
    _check_many(a, b)
    _check_distinct(a, b)
    y = half_log_ratio(a, b)
    return stable.as_output(_gap_ratio(p, (num_order, 0.0), (den_order, 0.0), y), y)
