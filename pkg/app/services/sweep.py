"""Monotonicity map of the (r, q) plane written as CSV."""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterator, List, Tuple

from app.api.schemas import SweepGrid
from app.core.types import RQPoint
from app.services import regions

logger = logging.getLogger(__name__)

HEADER = ("r", "q", "class_g", "class_f")
EXCLUDED = "excluded"


def grid_values(low: float, high: float, steps: int) -> List[float]:
    """``steps`` equally spaced values from low to high, stepped in exact decimals.

    Stepping in rationals keeps points such as 0.5 or 2.5 exactly on the grid.
    """

    start, stop = Fraction(repr(float(low))), Fraction(repr(float(high)))
    width = (stop - start) / (steps - 1)
    return [float(start + i * width) for i in range(steps)]


def format_number(value: float) -> str:
    text = repr(float(value))
    if text.endswith(".0"):
        text = text[:-2]
    return "0" if text == "-0" else text


def classify_cell(r: float, q: float) -> Tuple[str, str]:
    if RQPoint.is_excluded(r, q):
        return EXCLUDED, EXCLUDED
    point = RQPoint(r, q)
    return regions.classify_g(point).short, regions.classify_f(point).short


def iter_rows(grid: SweepGrid) -> Iterator[Tuple[str, str, str, str]]:
    """Rows in r-major order: r is the outer loop, q the inner one."""

    qs = grid_values(*grid.q_range)
    for r in grid_values(*grid.r_range):
        for q in qs:
            class_g, class_f = classify_cell(r, q)
            yield format_number(r), format_number(q), class_g, class_f


def render(grid: SweepGrid) -> str:
    lines = [",".join(HEADER)]
    lines.extend(",".join(row) for row in iter_rows(grid))
    return "\n".join(lines) + "\n"


def write_sweep(grid: SweepGrid) -> Path:
    """Write the CSV with LF line endings; OSError propagates to the caller."""

    path = Path(grid.output_path)
    text = render(grid)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info("sweep written path=%s rows=%s", path, text.count("\n") - 1)
    return path
