"""Golden-section search and a multi-start wrapper for one-dimensional extrema."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from app.core.errors import SearchNotConvergedError

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


@dataclass(frozen=True)
class Bracket:
    low: float
    high: float
    iterations: int
    converged: bool


def golden_section(
    f: Callable[[float], float],
    low: float,
    high: float,
    tol: float = 1e-8,
    max_iter: int = 200,
) -> Bracket:
    """Shrink [low, high] around the minimum of a unimodal f until it is narrower than tol."""

    low, high = min(low, high), max(low, high)
    h = high - low
    if h <= tol:
        return Bracket(low, high, 0, True)

    needed = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    steps = min(needed, max_iter)

    c = low + INV_PHI_SQUARE * h
    d = low + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc < yd:
            high = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = low + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            low = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = low + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return Bracket(low, d, steps, needed <= max_iter)
    return Bracket(c, high, steps, needed <= max_iter)


@dataclass(frozen=True)
class Extrema:
    inf: float
    sup: float
    x_inf: float
    x_sup: float
    accuracy: float
    converged: bool


def empirical_extrema(
    f: Callable[[float], float],
    x_min: float,
    x_max: float,
    starts: int = 8,
    tol: float = 1e-10,
    max_iter: int = 200,
    strict: bool = False,
) -> Extrema:
    """Infimum and supremum of f on [x_min, x_max].

    The search runs in u = ln x. The interval is cut into ``starts`` brackets,
    golden-section search runs for the minimum and the maximum in each, and the
    interval edges are always candidates so that monotone functions report
    their edge values. ``accuracy`` is the widest final bracket in x.
    """

    edges = np.linspace(math.log(x_min), math.log(x_max), starts + 1)

    def g(u: float) -> float:
        return float(f(math.exp(u)))

    candidates = [(g(edges[0]), edges[0]), (g(edges[-1]), edges[-1])]
    accuracy = 0.0
    converged = True
    for left, right in zip(edges[:-1], edges[1:]):
        for sign in (1.0, -1.0):
            bracket = golden_section(lambda u: sign * g(u), left, right, tol, max_iter)
            mid = 0.5 * (bracket.low + bracket.high)
            candidates.append((g(mid), mid))
            accuracy = max(accuracy, math.exp(bracket.high) - math.exp(bracket.low))
            converged = converged and bracket.converged

    low_value, low_u = min(candidates, key=lambda item: item[0])
    high_value, high_u = max(candidates, key=lambda item: item[0])
    if not converged:
        logger.warning("extremum search hit max_iter=%s on [%s, %s]", max_iter, x_min, x_max)
        if strict:
            raise SearchNotConvergedError(f"golden-section search exceeded {max_iter} iterations")
    return Extrema(
        inf=low_value,
        sup=high_value,
        x_inf=math.exp(low_u),
        x_sup=math.exp(high_u),
        accuracy=accuracy,
        converged=converged,
    )
