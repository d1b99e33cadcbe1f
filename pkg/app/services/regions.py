"""Exact region predicates for the (r, q) plane and the theorem case selectors.

Every threshold (2s, 2t, 2(s+t)/3, (4t+2s)/3, ...) is compared in rational
arithmetic on the shortest decimal that round-trips each float input, so
inputs written as 2.5 or 0.1 sit exactly on the boundary they name. A float
equal to the float nearest a threshold also counts as on it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from app.core.enums import Corollary32Case, MonotonicityClass, Theorem31Case
from app.core.errors import DomainError
from app.core.types import ExponentTriple, QuadExponents, RQPoint

logger = logging.getLogger(__name__)

TWO_THIRDS = Fraction(2, 3)
HALF = Fraction(1, 2)
THREE_QUARTERS = Fraction(3, 4)
THREE_HALVES = Fraction(3, 2)

# Points where G_{r,q} is constant; removed from both monotone regions.
CONSTANT_POINTS = ((HALF, Fraction(1)), (Fraction(2), Fraction(2)))
_REMOVED_POINTS = CONSTANT_POINTS + ((Fraction(-1), Fraction(0)),)


def _exact(value: float) -> Fraction:
    """Read a float as its shortest round-trip decimal."""

    return Fraction(repr(float(value)))


def _leq(value: Fraction, bound: Fraction) -> bool:
    """value <= bound, also true when value is the float nearest to bound."""

    return value <= bound or float(value) == float(bound)


def _geq(value: Fraction, bound: Fraction) -> bool:
    return value >= bound or float(value) == float(bound)


def _third_line(u: Fraction) -> Fraction:
    return TWO_THIRDS * (u + 1)


@dataclass(frozen=True)
class RegionMatch:
    tag: MonotonicityClass
    rule: str


def _decreasing_rule(u: Fraction, v: Fraction) -> Optional[str]:
    if (u, v) in _REMOVED_POINTS:
        return None
    line = _third_line(u)
    if u < 0 and _leq(v, min(Fraction(0), line)):
        return "r<0, q<=min(0, 2(r+1)/3)"
    if 0 < u < 1 and _geq(v, max(2 * u, line)):
        return "0<r<1, q>=max(2r, 2(r+1)/3)"
    if u > 1 and _leq(v, min(Fraction(2), line)):
        return "r>1, q<=min(2, 2(r+1)/3)"
    return None


def _increasing_rule(u: Fraction, v: Fraction) -> Optional[str]:
    if (u, v) in _REMOVED_POINTS:
        return None
    line = _third_line(u)
    if u < 0 and _geq(v, max(Fraction(0), line)):
        return "r<0, q>=max(0, 2(r+1)/3)"
    if 0 < u < 1 and _leq(v, min(2 * u, line)):
        return "0<r<1, q<=min(2r, 2(r+1)/3)"
    if u > 1 and _geq(v, max(Fraction(2), line)):
        return "r>1, q>=max(2, 2(r+1)/3)"
    return None


def match_g(point: RQPoint) -> RegionMatch:
    """Classify G_{r,q} and report the inequality that decided it."""

    u, v = _exact(point.r), _exact(point.q)
    if (u, v) in CONSTANT_POINTS:
        return RegionMatch(MonotonicityClass.CONSTANT, f"(r,q)=({point.r:g},{point.q:g}) is a constant point")
    rule = _decreasing_rule(u, v)
    if rule is not None:
        return RegionMatch(MonotonicityClass.DECREASING, rule)
    rule = _increasing_rule(u, v)
    if rule is not None:
        return RegionMatch(MonotonicityClass.INCREASING, rule)
    return RegionMatch(MonotonicityClass.NEITHER, "outside both monotone regions")


def match_f(point: RQPoint) -> RegionMatch:
    """Sufficient-condition classification of F_{r,q}."""

    u, v = _exact(point.r), _exact(point.q)
    rule = _decreasing_rule(u, v)
    if rule is not None:
        return RegionMatch(MonotonicityClass.DECREASING, rule)
    rule = _increasing_rule(u, v)
    if rule is not None:
        return RegionMatch(MonotonicityClass.INCREASING, rule)
    return RegionMatch(MonotonicityClass.UNKNOWN, "no sufficient condition applies")


def classify_g(point: RQPoint) -> MonotonicityClass:
    return match_g(point).tag


def classify_f(point: RQPoint) -> MonotonicityClass:
    return match_f(point).tag


def classify_grid_point(r: float, q: float, function: str = "g") -> Optional[MonotonicityClass]:
    """Like classify_g/classify_f but returns None on the excluded lines."""

    if RQPoint.is_excluded(r, q):
        return None
    point = RQPoint(r, q)
    return classify_g(point) if function == "g" else classify_f(point)


def expected_h_sign(r: float, q: float) -> Optional[int]:
    """Sign that H_{r,q} keeps on all of (0, inf), or None in the gap between columns.

    One row per r-interval: the first test is the H > 0 column, the second the
    H < 0 column.
    """

    u, v = _exact(r), _exact(q)
    if u in (-1, 0, HALF, 1, 2):
        raise DomainError(f"no row for r={r}")
    line = _third_line(u)
    if u > 2:
        positive, negative = _geq(v, line), v <= 2
    elif u > 1:
        positive, negative = v >= 2, _leq(v, line)
    elif u > HALF:
        positive, negative = _leq(v, line), v >= 2 * u
    elif u > 0:
        positive, negative = v <= 2 * u, _geq(v, line)
    elif u > -1:
        positive, negative = _geq(v, line), v < 0
    else:
        positive, negative = v > 0, _leq(v, line)
    if positive:
        return 1
    if negative:
        return -1
    return None


# ---------------------------------------------------------------------------
# Theorem case selectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseSelection:
    case: Theorem31Case
    boundary_exception_ok: bool
    reason: str = ""

    @property
    def covered(self) -> bool:
        return self.case is not Theorem31Case.NOT_COVERED


def _select_branch(
    p: Fraction,
    pivot: Fraction,
    line: Fraction,
    on_exception_line: bool,
    branches: Tuple[Theorem31Case, Theorem31Case],
    labels: Tuple[str, str],
) -> CaseSelection:
    """Pick the p >= max(pivot, line) or p <= min(pivot, line) branch.

    On the exception line pivot == line and p must differ from the pivot.
    """

    upper, lower = branches
    pivot_name, exception_reason = labels
    if _geq(p, max(pivot, line)):
        if on_exception_line and not p > pivot:
            return CaseSelection(Theorem31Case.NOT_COVERED, False, exception_reason)
        return CaseSelection(upper, True)
    if _leq(p, min(pivot, line)):
        if on_exception_line and not p < pivot:
            return CaseSelection(Theorem31Case.NOT_COVERED, False, exception_reason)
        return CaseSelection(lower, True)
    return CaseSelection(Theorem31Case.NOT_COVERED, True, f"p lies strictly between {pivot_name} and 2(s+t)/3")


def theorem31_case(params: ExponentTriple) -> CaseSelection:
    s, t, p = _exact(params.s), _exact(params.t), _exact(params.p)
    line = TWO_THIRDS * (s + t)
    if 0 < s:
        branches = (Theorem31Case.A_UPPER, Theorem31Case.A_LOWER)
        selection = _select_branch(p, 2 * s, line, t == 2 * s, branches, ("2s", "t=2s and p=2s"))
    elif t < 0:
        branches = (Theorem31Case.B_UPPER, Theorem31Case.B_LOWER)
        selection = _select_branch(p, 2 * t, line, s == 2 * t, branches, ("2t", "s=2t and p=2t"))
    else:
        branches = (Theorem31Case.C_UPPER, Theorem31Case.C_LOWER)
        selection = _select_branch(p, Fraction(0), line, s == -t, branches, ("0", "s=-t and p=0"))
    logger.debug("theorem31 case s=%s t=%s p=%s case=%s", params.s, params.t, params.p, selection.case.value)
    return selection


def corollary32_case(s: float, t: float) -> Corollary32Case:
    if s == 0 or t == 0 or not s < t:
        raise DomainError(f"expected nonzero s < t, got s={s} t={t}")
    s_, t_ = _exact(s), _exact(t)
    if t_ < 0:
        return Corollary32Case.A
    if s_ < 0:
        return Corollary32Case.B if _leq(t_, THREE_HALVES - s_) else Corollary32Case.NOT_COVERED
    if s_ < HALF:
        return Corollary32Case.C_I if _leq(t_, THREE_HALVES - s_) else Corollary32Case.NOT_COVERED
    if s_ == HALF:
        if t_ < 1:
            return Corollary32Case.C_II
        if t_ > 1:
            return Corollary32Case.D_I
        return Corollary32Case.NOT_COVERED
    if s_ < THREE_QUARTERS:
        return Corollary32Case.D_II if _geq(t_, THREE_HALVES - s_) else Corollary32Case.NOT_COVERED
    return Corollary32Case.D_III


# ---------------------------------------------------------------------------
# The set A_q and the second theorem's condition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AQThreshold:
    """A_q = [t_min, inf) when ``closed``, (t_min, inf) otherwise."""

    q: float
    t_min: float
    closed: bool

    def contains(self, t: float) -> bool:
        return _in_aq(_exact(self.q), _exact(t))

    def describe(self) -> str:
        left = "[" if self.closed else "("
        return f"A_q = {left}{self.t_min:g}, inf)"


def _aq_t_min(q: Fraction) -> Fraction:
    return 1 + THREE_QUARTERS * (q - 2)


def aq_threshold(q: float) -> AQThreshold:
    if not q > 0:
        raise DomainError(f"q must be positive, got q={q}")
    if _exact(q) > 2:
        return AQThreshold(q=q, t_min=float(_aq_t_min(_exact(q))), closed=True)
    return AQThreshold(q=q, t_min=1.0, closed=False)


def _in_aq(q: Fraction, t: Fraction) -> bool:
    if q > 2:
        return _geq(t, _aq_t_min(q))
    return t > 1


def theorem33_applicable(params: QuadExponents) -> bool:
    """0 < p <= (4t + 2s)/3."""

    s, t, p = _exact(params.s), _exact(params.t), _exact(params.p)
    return 0 < p and _leq(p, (4 * t + 2 * s) / 3)


def theorem33_applicable_via_aq(params: QuadExponents) -> bool:
    """Same condition stated as t/s and r/s both lying in A_{p/s}."""

    s, t, r, p = _exact(params.s), _exact(params.t), _exact(params.r), _exact(params.p)
    q = p / s
    return q > 0 and _in_aq(q, t / s) and _in_aq(q, r / s)


def theorem33_old_condition(params: QuadExponents) -> bool:
    """The earlier sufficient condition 0 < p <= t."""

    return 0 < _exact(params.p) <= _exact(params.t)
