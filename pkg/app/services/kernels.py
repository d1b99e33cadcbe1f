"""Hyperbolic kernels used to classify monotonicity and to derive the bounds.

All evaluators take ``x`` as a scalar or an array and return the same shape.
Large arguments go through log-domain or exponentially rescaled forms; small
arguments switch to even-power series wherever the direct formula cancels.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import numpy as np

from app.core.errors import DomainError
from app.core.types import KernelTriple, RQPoint
from app.services import stable

logger = logging.getLogger(__name__)

# x below which f_func and f_two_quotient use series in x^2.
SMALL_X = 1e-3
# Orders at which K~_r is not defined (K_r or K_{r-1} vanishes, or the
# ratio is constant).
K_TILDE_EXCLUDED = (-1.0, 0.0, 0.5, 1.0, 2.0)
# Terms kept in the Taylor series of K_l.
_K_SERIES_TERMS = 9
# 2 max(|l|, 1) x below which K_l is summed from its series.
_K_SERIES_LIMIT = 0.5
# t x at or below which S(x, t) is summed from its series in P_n.
_S_SERIES_LIMIT = 1.0
_S_SERIES_TERMS = 16

Number = Union[int, float, Fraction]


def _x_array(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError("x must be positive")
    return arr


# ---------------------------------------------------------------------------
# L_{alpha, beta, gamma}
# ---------------------------------------------------------------------------


def l_kernel(triple: KernelTriple, x):
    """(cosh(ax) - cosh(cx))/(cosh(bx) - cosh(cx)) for (a, b, c) = (alpha, beta, gamma).

    Evaluated as the product of sinh quotients obtained from
    cosh u - cosh w = 2 sinh((u+w)/2) sinh((u-w)/2), in log domain.
    """

    arr = _x_array(x)
    alpha, beta, gamma = abs(triple.alpha), abs(triple.beta), abs(triple.gamma)
    half = 0.5 * arr
    factors = (alpha + gamma, alpha - gamma, beta + gamma, beta - gamma)
    sign = math.copysign(1.0, factors[1]) * math.copysign(1.0, factors[3])
    log_mag = (
        stable.log_abs_sinh(factors[0] * half)
        + stable.log_abs_sinh(factors[1] * half)
        - stable.log_abs_sinh(factors[2] * half)
        - stable.log_abs_sinh(factors[3] * half)
    )
    return stable.as_output(sign * np.exp(log_mag), x)


def delta_sign(triple: KernelTriple) -> int:
    """sgn((a^2 - b^2)(a^2 - c^2)(b^2 - c^2)), exact."""

    a, b, c = abs(triple.alpha), abs(triple.beta), abs(triple.gamma)
    sign = 1
    for left, right in ((a, b), (a, c), (b, c)):
        if left < right:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# K_l, K~_r, H_{r,q}, A_r, B_r
# ---------------------------------------------------------------------------


def _k_series(ell: float, x: np.ndarray) -> np.ndarray:
    two_x = 2.0 * x
    total = np.zeros_like(x)
    power = two_x
    for n in range(1, _K_SERIES_TERMS + 1):
        power = power * two_x * two_x / ((2 * n) * (2 * n + 1))
        total = total + power * (ell ** (2 * n + 1) - ell)
    return total


def _k_scaled(ell: float, x: np.ndarray, m: float) -> np.ndarray:
    """K_l(x) e^(-2 m x), with m >= max(|l|, 1)."""

    small = 2.0 * max(abs(ell), 1.0) * x < _K_SERIES_LIMIT
    xs = np.where(small, x, 0.0)
    series = _k_series(ell, xs) * np.exp(-2.0 * m * xs)
    direct = 0.5 * (np.exp(2.0 * (ell - m) * x) - np.exp(-2.0 * (ell + m) * x)) - 0.5 * ell * (
        np.exp(2.0 * (1.0 - m) * x) - np.exp(-2.0 * (1.0 + m) * x)
    )
    return np.where(small, series, direct)


def k_func(ell: float, x):
    """K_l(x) = sinh(2 l x) - l sinh(2x)."""

    arr = _x_array(x)
    m = max(abs(ell), 1.0)
    with np.errstate(over="ignore"):
        out = _k_scaled(ell, arr, m) * np.exp(2.0 * m * arr)
    return stable.as_output(out, x)


def _check_k_tilde(r: float) -> None:
    if r in K_TILDE_EXCLUDED:
        raise DomainError(f"K~_r is not defined at r={r}")


def k_tilde(r: float, x):
    """1 - K_{r-1}/K_r."""

    _check_k_tilde(r)
    arr = _x_array(x)
    m = max(abs(r), abs(r - 1.0), 1.0)
    out = 1.0 - _k_scaled(r - 1.0, arr, m) / _k_scaled(r, arr, m)
    return stable.as_output(out, x)


def h_func(point: RQPoint, x):
    """H_{r,q}(x) = (q - 2) K_r(x) - q K_{r-1}(x); same sign as d/dx G_{r,q}."""

    arr = _x_array(x)
    r, q = point.r, point.q
    m = max(abs(r), abs(r - 1.0), 1.0)
    scaled = (q - 2.0) * _k_scaled(r, arr, m) - q * _k_scaled(r - 1.0, arr, m)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.where(scaled == 0, 0.0, scaled * np.exp(2.0 * m * arr))
    return stable.as_output(out, x)


def h_sign(point: RQPoint, x):
    """Sign of H_{r,q}, free of overflow."""

    arr = _x_array(x)
    r, q = point.r, point.q
    m = max(abs(r), abs(r - 1.0), 1.0)
    scaled = (q - 2.0) * _k_scaled(r, arr, m) - q * _k_scaled(r - 1.0, arr, m)
    return stable.as_output(np.sign(scaled), x)


def a_func(r: float, x):
    """A_r = K_r K~_r = K_r - K_{r-1}."""

    _check_k_tilde(r)
    arr = _x_array(x)
    with np.errstate(over="ignore"):
        out = np.asarray(k_func(r, arr)) * np.asarray(k_tilde(r, arr))
    return stable.as_output(out, x)


def b_func(r: float, x):
    """B_r = 2/K~_r, so that H_{r,q} = A_r (q - B_r)."""

    return stable.as_output(2.0 / np.asarray(k_tilde(r, _x_array(x))), x)


@dataclass(frozen=True)
class KTildeBehaviour:
    """Direction of K~_r on (0, inf) with its limits at 0+ and at +inf."""

    increasing: bool
    limit_at_zero: float
    limit_at_infinity: float


def k_tilde_behaviour(r: float) -> KTildeBehaviour:
    _check_k_tilde(r)
    at_zero = 3.0 / (r + 1.0)
    if r > 2:
        return KTildeBehaviour(True, at_zero, 1.0)
    if 1 < r < 2:
        return KTildeBehaviour(False, at_zero, 1.0)
    if 0.5 < r < 1:
        return KTildeBehaviour(False, at_zero, 1.0 / r)
    if 0 < r < 0.5:
        return KTildeBehaviour(True, at_zero, 1.0 / r)
    if -1 < r < 0:
        return KTildeBehaviour(True, at_zero, math.inf)
    return KTildeBehaviour(False, at_zero, -math.inf)


# ---------------------------------------------------------------------------
# G_{r,q}, F_{r,q}
# ---------------------------------------------------------------------------


def g_func(point: RQPoint, x):
    """cosh(rx)^(q/r) tanh(rx) / (cosh(x)^q tanh(x)).

    The quotient f'_{r,q}/f'_{1,q} of f_{v,q}(x) = cosh(vx)^(q/v); its sign is sgn(r).
    """

    arr = _x_array(x)
    r, q = point.r, point.q
    log_mag = (
        q * stable.log_cosh_over(r, arr)
        - q * stable.log_cosh(arr)
        + stable.log_abs_tanh(r * arr)
        - stable.log_abs_tanh(arr)
    )
    return stable.as_output(math.copysign(1.0, r) * np.exp(log_mag), x)


def f_func(point: RQPoint, x):
    """(cosh(rx)^(q/r) - 1)/(cosh(x)^q - 1)."""

    arr = _x_array(x)
    r, q = point.r, point.q
    num = q * stable.log_cosh_gap(r, 0.0, arr, SMALL_X)
    den = q * stable.log_cosh_gap(1.0, 0.0, arr, SMALL_X)
    return stable.as_output(stable.expm1_ratio(num, den), x)


def f_limits(point: RQPoint) -> Tuple[float, float]:
    """Limits of F_{r,q} at 0+ and at +inf."""

    r, q = point.r, point.q
    if r > 0 and q > 0:
        at_infinity = 2.0 ** (q - q / r)
    elif r < 0 and q > 0:
        at_infinity = 0.0
    elif r > 0:
        at_infinity = 1.0
    else:
        at_infinity = -math.inf
    return r, at_infinity


# ---------------------------------------------------------------------------
# R_q, S, dR_q/dt, P_n
# ---------------------------------------------------------------------------


def _check_rt(q: float, t: float) -> None:
    if not q > 0:
        raise DomainError(f"q must be positive, got q={q}")
    if not t > 1:
        raise DomainError(f"t must exceed 1, got t={t}")


def r_func(q: float, x, t: float):
    """(t-1) coth((t-1)x) - (q+1) tanh(x) + (q-t) tanh(tx)."""

    _check_rt(q, t)
    arr = _x_array(x)
    delta = t - 1.0
    out = delta / np.tanh(delta * arr) - (q + 1.0) * np.tanh(arr) + (q - t) * np.tanh(t * arr)
    return stable.as_output(out, x)


def s_limit_at_zero(t: float) -> float:
    return (2.0 + 4.0 * t) / 3.0


def _s_direct(x: np.ndarray, t: float) -> np.ndarray:
    """S - t = e^(2x) a (d a - c), a = cosh(tx) e^-x / sinh(dx), c = cosh(x) e^-x / x."""

    delta = t - 1.0
    a = np.exp(stable.log_cosh(t * x) - stable.log_sinh(delta * x) - x)
    c = np.exp(stable.log_cosh(x) - x) / x
    with np.errstate(over="ignore"):
        return t + np.exp(2.0 * x) * a * (delta * a - c)


def _s_series_coefficients(t: float) -> np.ndarray:
    """4^n P_n(t-1) / (6 (2n+1)!) for n = 2, 3, ...; every term is positive."""

    delta = t - 1.0
    return np.array(
        [4**n * poly_p(n, delta) / (6 * math.factorial(2 * n + 1)) for n in range(2, 2 + _S_SERIES_TERMS)]
    )


def _s_excess_series(x: np.ndarray, t: float) -> np.ndarray:
    """x sinh^2(dx) (S - (2+4t)/3) = sum_n c_n x^(2n+1), summed in Horner form."""

    coeffs = _s_series_coefficients(t)
    x2 = x * x
    acc = np.zeros_like(x)
    for c in coeffs[::-1]:
        acc = acc * x2 + c
    return acc * x2 * x2 / np.sinh((t - 1.0) * x) ** 2


def s_excess(x, t: float):
    """S(x, t) - (2+4t)/3 without cancellation as x -> 0+."""

    if not t > 1:
        raise DomainError(f"t must exceed 1, got t={t}")
    arr = _x_array(x)
    small = t * arr <= _S_SERIES_LIMIT
    edge = _S_SERIES_LIMIT / t
    series = _s_excess_series(np.where(small, arr, edge), t)
    direct = _s_direct(np.where(small, edge, arr), t) - s_limit_at_zero(t)
    return stable.as_output(np.where(small, series, direct), x)


def s_func(x, t: float):
    """t + d cosh^2(tx)/sinh^2(dx) - cosh(x) cosh(tx)/(x sinh(dx)), d = t - 1."""

    excess = np.asarray(s_excess(x, t), dtype=float)
    return stable.as_output(s_limit_at_zero(t) + excess, x)


def dr_dt(q: float, x, t: float):
    """Closed form of dR_q/dt: x/cosh^2(tx) * (q - S(x, t))."""

    _check_rt(q, t)
    arr = _x_array(x)
    weight = arr * np.exp(-2.0 * stable.log_cosh(t * arr))
    gap = (q - s_limit_at_zero(t)) - np.asarray(s_excess(arr, t), dtype=float)
    # Past the overflow of S the product underflows; it is negative there.
    with np.errstate(invalid="ignore"):
        out = np.where(np.isfinite(gap), weight * gap, -0.0)
    return stable.as_output(out, x)


def poly_p_exact(n: int, delta: Number) -> Fraction:
    """P_n(d) in exact rational arithmetic."""

    if int(n) != n or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    d = Fraction(delta)
    if d < 0:
        raise DomainError(f"delta must be non-negative, got {delta!r}")
    n = int(n)
    one_d = 1 + d
    return (
        (2 * n + 1) * (3 * d * one_d ** (2 * n) - (3 + d) * d ** (2 * n))
        - 3 * one_d ** (2 * n + 1)
        - 3 * d ** (2 * n + 1)
        + 3
    )


def poly_p(n: int, delta: Number) -> float:
    return float(poly_p_exact(n, delta))


# ---------------------------------------------------------------------------
# F_q(x, v) and its quotient
# ---------------------------------------------------------------------------


def _check_two(q: float, v: float) -> None:
    if not q > 0:
        raise DomainError(f"q must be positive, got q={q}")
    if not v > 1:
        raise DomainError(f"v must exceed 1, got v={v}")


def f_two(q: float, x, v: float):
    """(cosh(vx)^(1/v)/cosh(x))^q; onto [1, 2^(q - q/v)) for x >= 0."""

    _check_two(q, v)
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("x must be non-negative")
    out = np.exp(q * stable.log_cosh_gap(v, 1.0, arr, SMALL_X))
    return stable.as_output(out, x)


def f_two_dx(q: float, x, v: float):
    """q sinh((v-1)x)/(cosh(x) cosh(vx)) F_q(x, v)."""

    _check_two(q, v)
    arr = np.asarray(x, dtype=float)
    log_weight = stable.log_abs_sinh((v - 1.0) * arr) - stable.log_cosh(arr) - stable.log_cosh(v * arr)
    with np.errstate(divide="ignore"):
        out = q * np.exp(log_weight) * np.asarray(f_two(q, arr, v))
    return stable.as_output(out, x)


def f_two_quotient(q: float, x, ell: float, k: float):
    """(F_q(x, l) - 1)/(F_q(x, k) - 1)."""

    _check_two(q, ell)
    _check_two(q, k)
    arr = _x_array(x)
    num = q * stable.log_cosh_gap(ell, 1.0, arr, SMALL_X)
    den = q * stable.log_cosh_gap(k, 1.0, arr, SMALL_X)
    return stable.as_output(stable.expm1_ratio(num, den), x)


def f_two_quotient_limits(q: float, ell: float, k: float) -> Tuple[float, float]:
    at_zero = (ell - 1.0) / (k - 1.0)
    at_infinity = math.expm1((q - q / ell) * math.log(2.0)) / math.expm1((q - q / k) * math.log(2.0))
    return at_zero, at_infinity
