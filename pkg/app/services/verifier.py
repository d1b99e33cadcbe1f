"""Numerical verification of containment, monotonicity and sharpness claims.

Violations are data: every check returns a :class:`VerificationReport` and
never raises because a sample fell outside its bounds.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.api.schemas import SampleConfig, VerificationReport
from app.core.config import get_settings
from app.core.enums import MonotonicityClass
from app.core.types import BoundPair, ExponentTriple, QuadExponents, RQPoint
from app.services import bounds, kernels, means, regions, sampling, search

logger = logging.getLogger(__name__)

ArrayFn = Callable[[np.ndarray], np.ndarray]

# Below this value the unbounded lower branch counts as reached.
UNBOUNDED_REACH = -1e3
# Gap allowed between a witness value and the endpoint it approaches.
SHARPNESS_GAP = 1e-3


# ---------------------------------------------------------------------------
# Ratio and kernel specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatioSpec:
    """A ratio of means evaluated on pairs, and along ab = 1 with ln a = y."""

    name: str
    evaluate: Callable[[np.ndarray, np.ndarray], np.ndarray]
    along: ArrayFn


def rho_spec(params: ExponentTriple) -> RatioSpec:
    return RatioSpec(
        name=f"rho(s={params.s:g},t={params.t:g},p={params.p:g})",
        evaluate=lambda a, b: means.ratio_rho_many(params, a, b),
        along=lambda y: means.normalized_ratio_rho(params, y),
    )


def general_spec(params: QuadExponents) -> RatioSpec:
    return RatioSpec(
        name=f"general(r={params.r:g},s={params.s:g},t={params.t:g},p={params.p:g})",
        evaluate=lambda a, b: means.ratio_general_many(params, a, b),
        along=lambda y: means.normalized_ratio_general(params, y),
    )


def intro_spec(p: float) -> RatioSpec:
    return RatioSpec(
        name=f"intro(p={p:g})",
        evaluate=lambda a, b: means.intro_ratio_many(p, a, b),
        along=lambda y: means.normalized_intro_ratio(p, y),
    )


def mean_gap_spec(num_order: float, den_order: float, p: float) -> RatioSpec:
    def along(y):
        y = np.asarray(y, dtype=float)
        return means.mean_gap_ratio_many(num_order, den_order, p, np.exp(y), np.exp(-y))

    return RatioSpec(
        name=f"gap(num={num_order:g},den={den_order:g},p={p:g})",
        evaluate=lambda a, b: means.mean_gap_ratio_many(num_order, den_order, p, a, b),
        along=along,
    )


@dataclass(frozen=True)
class KernelSpec:
    name: str
    fn: ArrayFn


def g_kernel(point: RQPoint) -> KernelSpec:
    return KernelSpec(f"G(r={point.r:g},q={point.q:g})", lambda x: kernels.g_func(point, x))


def f_kernel(point: RQPoint) -> KernelSpec:
    return KernelSpec(f"F(r={point.r:g},q={point.q:g})", lambda x: kernels.f_func(point, x))


# ---------------------------------------------------------------------------
# Containment
# ---------------------------------------------------------------------------


def _widen(bound: float, slack: float) -> float:
    return slack * max(1.0, abs(bound)) if math.isfinite(bound) else 0.0


def _witness(a: float, b: float, value: float) -> Dict[str, float]:
    return {"a": float(a), "b": float(b), "value": float(value)}


def _containment_chunk(bound_pair: BoundPair, ratio: RatioSpec, slack: float, chunk: sampling.PairChunk) -> VerificationReport:
    if chunk.a.size == 0:
        return VerificationReport()
    values = np.asarray(ratio.evaluate(chunk.a, chunk.b), dtype=float)
    with np.errstate(invalid="ignore"):
        low_gap = values - bound_pair.lower + _widen(bound_pair.lower, slack)
        high_gap = bound_pair.upper - values + _widen(bound_pair.upper, slack)
        bad_low = low_gap <= 0 if bound_pair.lower_strict else low_gap < 0
        bad_high = high_gap <= 0 if bound_pair.upper_strict else high_gap < 0
    margins = np.where(np.isnan(values), -math.inf, np.minimum(low_gap, high_gap))
    bad = bad_low | bad_high | np.isnan(values)
    if np.any(bad):
        first = int(np.flatnonzero(bad)[0])
        logger.warning(
            "bound violated ratio=%s a=%r b=%r value=%r lower=%r upper=%r",
            ratio.name,
            chunk.a[first],
            chunk.b[first],
            values[first],
            bound_pair.lower,
            bound_pair.upper,
        )
    finite = np.where(np.isnan(values), np.inf, values)
    i_min = int(np.argmin(finite))
    i_max = int(np.argmax(np.where(np.isnan(values), -np.inf, values)))
    return VerificationReport(
        checked=int(values.size),
        violations=int(np.count_nonzero(bad)),
        worst_margin=float(np.min(margins)),
        min_observed=float(values[i_min]),
        max_observed=float(values[i_max]),
        witness_min=_witness(chunk.a[i_min], chunk.b[i_min], values[i_min]),
        witness_max=_witness(chunk.a[i_max], chunk.b[i_max], values[i_max]),
    )


def verify_containment(bound_pair: BoundPair, ratio: RatioSpec, cfg: SampleConfig) -> VerificationReport:
    """Evaluate ``ratio`` on cfg.n_samples seeded pairs and count bound violations."""

    report = sampling.run_chunked(cfg, lambda chunk: _containment_chunk(bound_pair, ratio, cfg.tolerance, chunk))
    report = report.model_copy(update={"label": ratio.name})
    logger.info(
        "containment done ratio=%s checked=%s violations=%s worst_margin=%s",
        ratio.name,
        report.checked,
        report.violations,
        report.worst_margin,
    )
    return report


# ---------------------------------------------------------------------------
# Monotonicity
# ---------------------------------------------------------------------------


def sorted_sample(cfg: SampleConfig, n: Optional[int] = None) -> np.ndarray:
    """Sorted seeded log-uniform sample of [x_min, x_max] including both ends."""

    n = cfg.n_samples if n is None else n
    rng = sampling.chunk_rng(cfg.seed, 0)
    inner = sampling.log_uniform(rng, cfg.x_min, cfg.x_max, max(n - 2, 0))
    return np.unique(np.concatenate(([cfg.x_min], inner, [cfg.x_max])))


def direction_report(
    xs: np.ndarray,
    values: np.ndarray,
    expected: MonotonicityClass,
    slack: float,
    label: str = "",
) -> VerificationReport:
    """Compare the ordering of ``values`` along sorted ``xs`` with ``expected``."""

    values = np.asarray(values, dtype=float)
    scale = slack * np.maximum(1.0, np.abs(values[:-1]))
    diffs = np.diff(values)
    i_min = int(np.argmin(values))
    i_max = int(np.argmax(values))
    base = dict(
        label=label,
        checked=int(values.size),
        min_observed=float(values[i_min]),
        max_observed=float(values[i_max]),
        witness_min={"x": float(xs[i_min]), "value": float(values[i_min])},
        witness_max={"x": float(xs[i_max]), "value": float(values[i_max])},
    )
    if expected is MonotonicityClass.NEITHER:
        rises = np.flatnonzero(diffs > scale)
        falls = np.flatnonzero(diffs < -scale)
        if rises.size and falls.size:
            return VerificationReport(**base, worst_margin=float(min(diffs[rises].max(), -diffs[falls].min())))
        return VerificationReport(**base, violations=1, worst_margin=0.0, notes=["no change of direction found"])
    if expected is MonotonicityClass.CONSTANT:
        reference = values[0]
        margins = slack * max(1.0, abs(reference)) - np.abs(values - reference)
    elif expected is MonotonicityClass.INCREASING:
        margins = diffs + scale
    elif expected is MonotonicityClass.DECREASING:
        margins = -diffs + scale
    else:
        return VerificationReport(**base, inapplicable=True, notes=[f"cannot verify {expected.value}"])
    violations = int(np.count_nonzero(margins <= 0 if expected is not MonotonicityClass.CONSTANT else margins < 0))
    if violations:
        first = int(np.flatnonzero(margins <= 0)[0]) if expected is not MonotonicityClass.CONSTANT else 0
        logger.warning("monotonicity violated label=%s expected=%s x=%r", label, expected.value, xs[first])
    return VerificationReport(**base, violations=violations, worst_margin=float(np.min(margins)))


def verify_monotone(kernel: KernelSpec, expected: MonotonicityClass, cfg: SampleConfig) -> VerificationReport:
    xs = sorted_sample(cfg)
    values = np.asarray(kernel.fn(xs), dtype=float)
    report = direction_report(xs, values, expected, cfg.tolerance, label=kernel.name)
    logger.info("monotone check kernel=%s expected=%s violations=%s", kernel.name, expected.value, report.violations)
    return report


def infer_direction(values: np.ndarray, slack: float) -> Optional[MonotonicityClass]:
    values = np.asarray(values, dtype=float)
    reference = values[0]
    if np.all(np.abs(values - reference) <= slack * max(1.0, abs(reference))):
        return MonotonicityClass.CONSTANT
    scale = slack * np.maximum(1.0, np.abs(values[:-1]))
    diffs = np.diff(values)
    if np.all(diffs > -scale):
        return MonotonicityClass.INCREASING
    if np.all(diffs < scale):
        return MonotonicityClass.DECREASING
    return None


# ---------------------------------------------------------------------------
# Monotone rule for difference quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LHRCase:
    """f, g with derivatives; the optional overrides give stable closed forms."""

    name: str
    f: ArrayFn
    g: ArrayFn
    df: ArrayFn
    dg: ArrayFn
    derivative_ratio: Optional[ArrayFn] = None
    quotient: Optional[ArrayFn] = None


def verify_lhospital_rule(
    case: LHRCase,
    interval: Tuple[float, float],
    anchor: float,
    cfg: SampleConfig,
    expected: Optional[MonotonicityClass] = None,
) -> VerificationReport:
    """Check that (f(x) - f(c))/(g(x) - g(c)) moves in the direction of f'/g'.

    With ``expected`` set, a derivative ratio moving the other way counts as a
    violation as well.
    """

    sample_cfg = cfg.model_copy(update={"x_min": interval[0], "x_max": interval[1]})
    xs = sorted_sample(sample_cfg)
    xs = xs[xs != anchor]
    dg = np.asarray(case.dg(xs), dtype=float)
    if np.any(dg == 0) or np.unique(np.sign(dg)).size != 1:
        return VerificationReport(label=case.name, inapplicable=True, notes=["g' vanishes or changes sign"])
    if case.derivative_ratio is not None:
        ratio = np.asarray(case.derivative_ratio(xs), dtype=float)
    else:
        ratio = np.asarray(case.df(xs), dtype=float) / dg
    direction = infer_direction(ratio, cfg.tolerance)
    if direction is None:
        return VerificationReport(label=case.name, inapplicable=True, notes=["f'/g' is not monotone"])
    if case.quotient is not None:
        quotient = np.asarray(case.quotient(xs), dtype=float)
    else:
        quotient = (np.asarray(case.f(xs)) - case.f(np.asarray(anchor))) / (np.asarray(case.g(xs)) - case.g(np.asarray(anchor)))
    report = direction_report(xs, quotient, direction, cfg.tolerance, label=case.name)
    update = {"notes": report.notes + [f"direction={direction.value}"]}
    if expected is not None and direction is not expected:
        logger.warning("derivative ratio direction label=%s found=%s expected=%s", case.name, direction.value, expected.value)
        update["violations"] = report.violations + 1
    return report.model_copy(update=update)


def sinh_quotient_case(a: float, b: float) -> LHRCase:
    return LHRCase(
        name=f"sinh({a:g}x)/sinh({b:g}x)",
        f=lambda x: np.sinh(a * x),
        g=lambda x: np.sinh(b * x),
        df=lambda x: a * np.cosh(a * x),
        dg=lambda x: b * np.cosh(b * x),
    )


def power_cosh_case(point: RQPoint) -> LHRCase:
    """f = cosh(rx)^(q/r), g = cosh(x)^q; f'/g' = G_{r,q} and the quotient at 0 is F_{r,q}."""

    r, q = point.r, point.q
    return LHRCase(
        name=f"f_(r={r:g},q={q:g})/f_(1,q)",
        f=lambda x: np.cosh(r * x) ** (q / r),
        g=lambda x: np.cosh(x) ** q,
        df=lambda x: q * np.cosh(r * x) ** (q / r) * np.tanh(r * x),
        dg=lambda x: q * np.cosh(x) ** q * np.tanh(x),
        derivative_ratio=lambda x: kernels.g_func(point, x),
        quotient=lambda x: kernels.f_func(point, x),
    )


def f_two_case(q: float, ell: float, k: float) -> LHRCase:
    """f = F_q(., l), g = F_q(., k) anchored at 0."""

    return LHRCase(
        name=f"F_{q:g}(x,{ell:g})/F_{q:g}(x,{k:g})",
        f=lambda x: kernels.f_two(q, x, ell),
        g=lambda x: kernels.f_two(q, x, k),
        df=lambda x: kernels.f_two_dx(q, x, ell),
        dg=lambda x: kernels.f_two_dx(q, x, k),
        quotient=lambda x: kernels.f_two_quotient(q, x, ell, k),
    )


# ---------------------------------------------------------------------------
# Extremum search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    x_min: float = 1e-4
    x_max: float = 40.0
    starts: int = 8
    tol: float = 1e-10
    max_iter: int = 200

    @classmethod
    def from_settings(cls) -> "SearchConfig":
        settings = get_settings()
        return cls(
            x_min=settings.x_min,
            x_max=settings.x_max,
            starts=settings.multistart,
            max_iter=settings.golden_max_iter,
        )


def empirical_extrema(ratio: RatioSpec, cfg: Optional[SearchConfig] = None) -> search.Extrema:
    """Infimum and supremum of the ratio along ab = 1, ln a in [x_min, x_max]."""

    cfg = cfg or SearchConfig.from_settings()
    result = search.empirical_extrema(
        lambda y: float(ratio.along(y)),
        cfg.x_min,
        cfg.x_max,
        starts=cfg.starts,
        tol=cfg.tol,
        max_iter=cfg.max_iter,
    )
    logger.info("extrema ratio=%s inf=%r sup=%r converged=%s", ratio.name, result.inf, result.sup, result.converged)
    return result


# ---------------------------------------------------------------------------
# The set A_q
# ---------------------------------------------------------------------------

AQ_NEAR_ZERO = np.logspace(-8, -1, 71)
AQ_BELOW_STEP = 1e-3
AQ_OPEN_T_GRID = np.linspace(1.05, 6.0, 34)


@dataclass(frozen=True)
class AQBoundaryResult:
    threshold: regions.AQThreshold
    membership: VerificationReport
    below_witness: Optional[Dict[str, float]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if not self.membership.ok:
            return False
        return self.threshold.closed is False or self.below_witness is not None


def _limit_offset(q: float, t: float) -> Fraction:
    """(2+4t)/3 - q on the exact binary values of t and q."""

    return (2 + 4 * Fraction(t)) / 3 - Fraction(q)


def _closed_left_end(threshold: regions.AQThreshold) -> float:
    """Smallest float t with (2+4t)/3 >= q, starting from the rounded t_min."""

    t = threshold.t_min
    while _limit_offset(threshold.q, t) < 0:
        t = float(np.nextafter(t, math.inf))
    return t


def _aq_margin_report(q: float, t_values: Sequence[float], xs: np.ndarray, label: str) -> VerificationReport:
    report = VerificationReport(label=label)
    for t in t_values:
        gap = np.asarray(kernels.s_excess(xs, t), dtype=float) + float(_limit_offset(q, t))
        worst = int(np.argmin(gap))
        part = VerificationReport(
            checked=int(xs.size),
            violations=int(np.count_nonzero(gap <= 0)),
            worst_margin=float(gap[worst]),
            min_observed=float(gap[worst]),
            max_observed=float(np.max(gap)),
            witness_min={"x": float(xs[worst]), "t": float(t)},
        )
        report = report.merge(part)
    return report


def verify_aq_boundary(q: float, cfg: SampleConfig) -> AQBoundaryResult:
    """Certify dR_q/dt < 0 on A_q and find a sign witness just below its left end.

    The sign of dR_q/dt is the sign of q - S(x, t); the report measures S - q.
    """

    threshold = regions.aq_threshold(q)
    xs = sorted_sample(cfg, n=min(cfg.n_samples, 2000))
    if threshold.closed:
        t_min = _closed_left_end(threshold)
        membership = _aq_margin_report(q, [t_min], xs, label=f"aq(q={q:g})")
        t_below = t_min - AQ_BELOW_STEP
        derivative = np.asarray(kernels.dr_dt(q, AQ_NEAR_ZERO, t_below), dtype=float)
        hits = np.flatnonzero(derivative >= 0)
        witness = None
        if hits.size:
            i = int(hits[0])
            witness = {"x": float(AQ_NEAR_ZERO[i]), "t": float(t_below), "dr_dt": float(derivative[i])}
        else:
            logger.warning("no sign witness below t_min q=%s t=%s", q, t_below)
        return AQBoundaryResult(threshold, membership, witness)
    membership = _aq_margin_report(q, AQ_OPEN_T_GRID, xs, label=f"aq(q={q:g})")
    return AQBoundaryResult(threshold, membership, None, notes=["open set, no boundary witness"])


# ---------------------------------------------------------------------------
# Sharpness at the witness pairs
# ---------------------------------------------------------------------------

EPS_LADDER = (1e-1, 1e-2)
FAR_LADDER = (10.0, 20.0)


def verify_sharpness(
    params: ExponentTriple,
    eps: Optional[float] = None,
    far: Optional[float] = None,
) -> VerificationReport:
    """Check that the witness pairs approach both endpoints of the bound pair.

    Gaps must shrink along the eps and far ladders and end below 1e-3. An
    unbounded lower endpoint counts as reached once the far value drops below -1e3.
    """

    settings = get_settings()
    eps = settings.witness_eps if eps is None else eps
    far = settings.witness_far if far is None else far
    bound_pair = bounds.theorem31_bounds(params)
    near_target, far_target = bounds.theorem31_endpoint_limits(params)
    spec = rho_spec(params)
    scale = abs(params.t)

    def value_at(x: float) -> float:
        return float(spec.along(x / scale))

    near_values = [value_at(e) for e in EPS_LADDER + (eps,)]
    far_values = [value_at(x) for x in FAR_LADDER + (far,)]
    violations = 0
    notes: List[str] = []
    endpoints = sorted((near_target, far_target))
    if not all(
        endpoint == bound or math.isclose(endpoint, bound, rel_tol=1e-12)
        for endpoint, bound in zip(endpoints, (bound_pair.lower, bound_pair.upper))
    ):
        violations += 1
        notes.append(f"limits {endpoints!r} differ from bounds ({bound_pair.lower!r}, {bound_pair.upper!r})")
    near_gaps = [abs(v - near_target) for v in near_values]
    if near_gaps[-1] >= SHARPNESS_GAP:
        violations += 1
        notes.append(f"near gap {near_gaps[-1]!r}")
    if any(later > earlier + 1e-12 for earlier, later in zip(near_gaps, near_gaps[1:])):
        violations += 1
        notes.append("near gaps do not shrink")
    if math.isinf(far_target):
        if not far_values[-1] < UNBOUNDED_REACH:
            violations += 1
            notes.append(f"far value {far_values[-1]!r} above {UNBOUNDED_REACH}")
        if any(later > earlier for earlier, later in zip(far_values, far_values[1:])):
            violations += 1
            notes.append("far values do not decrease")
        far_gap = -math.inf
    else:
        far_gaps = [abs(v - far_target) for v in far_values]
        far_gap = far_gaps[-1]
        if far_gap >= SHARPNESS_GAP:
            violations += 1
            notes.append(f"far gap {far_gap!r}")
        if any(later > earlier + 1e-12 for earlier, later in zip(far_gaps, far_gaps[1:])):
            violations += 1
            notes.append("far gaps do not shrink")
    near_value, far_value = near_values[-1], far_values[-1]
    low_value, high_value = sorted((near_value, far_value))
    report = VerificationReport(
        label=f"sharpness {spec.name}",
        checked=len(near_values) + len(far_values),
        violations=violations,
        worst_margin=SHARPNESS_GAP - max(near_gaps[-1], far_gap if math.isfinite(far_gap) else 0.0),
        min_observed=low_value,
        max_observed=high_value,
        witness_min={"x": eps if low_value == near_value else far, "value": low_value},
        witness_max={"x": far if high_value == far_value else eps, "value": high_value},
        notes=notes,
    )
    if violations:
        logger.warning("sharpness failed ratio=%s notes=%s", spec.name, notes)
    return report
