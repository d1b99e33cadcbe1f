"""Overflow- and cancellation-safe building blocks for hyperbolic expressions.

Every helper accepts scalars or numpy arrays and broadcasts. Values are carried
in log domain so that arguments up to several hundred never overflow, and the
small-argument branches keep full relative precision where the direct formulas
would cancel.
"""

from __future__ import annotations

import numpy as np

LN2 = float(np.log(2.0))

# |z| below which ln cosh z is taken as log1p(2 sinh^2(z/2)).
_LOG_COSH_SMALL = 1.0
# |z| below which ln sinh z is evaluated directly.
_LOG_SINH_SMALL = 20.0
# |y| below which y coth y - 1 uses its Taylor polynomial.
_XCOTH_SERIES = 1e-2


def log_cosh(z):
    z = np.abs(np.asarray(z, dtype=float))
    small = z < _LOG_COSH_SMALL
    zs = np.where(small, z, 0.0)
    near = np.log1p(2.0 * np.sinh(0.5 * zs) ** 2)
    far = np.logaddexp(z, -z) - LN2
    return np.where(small, near, far)


def log_sinh(z):
    """ln sinh z for z > 0."""

    z = np.asarray(z, dtype=float)
    small = z < _LOG_SINH_SMALL
    zs = np.where(small, z, 1.0)
    zl = np.where(small, _LOG_SINH_SMALL, z)
    with np.errstate(divide="ignore"):
        near = np.log(np.sinh(zs))
    far = zl + np.log1p(-np.exp(-2.0 * zl)) - LN2
    return np.where(small, near, far)


def log_abs_sinh(z):
    return log_sinh(np.abs(np.asarray(z, dtype=float)))


def log_abs_tanh(z):
    z = np.abs(np.asarray(z, dtype=float))
    return log_sinh(z) - log_cosh(z)


def log_cosh_over(v, z):
    """ln cosh(v z) / v, continued by 0 at v = 0."""

    v = np.asarray(v, dtype=float)
    safe_v = np.where(v == 0, 1.0, v)
    return np.where(v == 0, 0.0, log_cosh(safe_v * z) / safe_v)


def log_cosh_gap(v, w, z, cutoff: float):
    """ln cosh(v z)/v - ln cosh(w z)/w.

    For |z| < cutoff the difference is taken from the Taylor polynomial
    (v - w) z^2/2 - (v^3 - w^3) z^4/12 + (v^5 - w^5) z^6/45, which avoids
    subtracting two nearly equal logarithms.
    """

    z = np.asarray(z, dtype=float)
    v = float(v)
    w = float(w)
    z2 = z * z
    series = z2 * ((v - w) / 2.0 - z2 * ((v**3 - w**3) / 12.0 - z2 * (v**5 - w**5) / 45.0))
    direct = log_cosh_over(v, z) - log_cosh_over(w, z)
    return np.where(np.abs(z) < cutoff, series, direct)


def xcoth_minus_one(y):
    """y coth y - 1, continued by 0 at y = 0."""

    y = np.abs(np.asarray(y, dtype=float))
    small = y < _XCOTH_SERIES
    ys = np.where(small, 1.0, y)
    y2 = y * y
    series = y2 * (1.0 / 3.0 - y2 * (1.0 / 45.0 - y2 * (2.0 / 945.0 - y2 / 4725.0)))
    direct = ys / np.tanh(ys) - 1.0
    return np.where(small, series, direct)


def log_abs_expm1(u):
    """ln |e^u - 1| without overflow for large positive u."""

    u = np.asarray(u, dtype=float)
    pos = u > 0
    up = np.where(pos, u, 1.0)
    un = np.where(pos, -1.0, u)
    with np.errstate(divide="ignore"):
        pos_val = up + np.log(-np.expm1(-up))
        neg_val = np.log(-np.expm1(un))
    return np.where(pos, pos_val, neg_val)


def expm1_ratio(u, v):
    """(e^u - 1)/(e^v - 1) evaluated through logarithms of the magnitudes."""

    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    sign = np.sign(u) * np.sign(v)
    with np.errstate(over="ignore"):
        return sign * np.exp(log_abs_expm1(u) - log_abs_expm1(v))


def as_output(value, like):
    """Return a Python float when the caller passed a scalar."""

    if np.ndim(like) == 0:
        return float(value)
    return np.asarray(value, dtype=float)
