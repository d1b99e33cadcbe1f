"""Named verification suites behind ``meanbounds verify --target``."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from app.api.schemas import SampleConfig, SuiteResult, VerificationReport
from app.core.enums import MonotonicityClass, Theorem31Case, VerifyTarget
from app.core.types import BoundPair, ExponentTriple, KernelTriple, QuadExponents, RQPoint
from app.services import bounds, kernels, regions, sampling, search, verifier

logger = logging.getLogger(__name__)

ALZER_QIU_LOWER = 2.0 / 3.0
ALZER_QIU_UPPER = 2.0 / math.e
# (I^p - G^p)/(A^p - G^p) < 2/3 for all pairs iff p >= this value.
KOUBA_UPPER_THRESHOLD = math.log(1.5) / math.log(math.e / 2.0)
# ... and > 2/3 for all pairs iff p <= this value.
KOUBA_LOWER_THRESHOLD = 6.0 / 5.0
TRIF_EXPONENTS = (2.0, 3.0)
KOUBA_ORDER = 1.25
CONSTANT_ACCURACY = 1e-3

THEOREM31_TRIPLES: Dict[str, Tuple[Tuple[float, float, float], ...]] = {
    "A_upper": ((1, 2, 3), (0.5, 2, 2), (1, 3, 3), (0.25, 1, 1), (0.4, 1, 1.2)),
    "A_lower": ((1, 2, 1), (0.75, 2, 1), (1, 4, -1), (2, 3, 2), (0.6, 1, 0.5)),
    "B_upper": ((-2, -1, 1), (-3, -1, -1), (-2, -1, -0.5), (-4, -2, -3), (-1.5, -1, 0.5)),
    "B_lower": ((-2, -1, -3), (-3, -1, -3), (-1.5, -1, -2.5), (-4, -2, -5), (-5, -2, -6)),
    "C_upper": ((-1, 1, 1), (-1, 2, 1), (-2, 1, 0.5), (-0.5, 1, 0.5), (-1, 3, 2)),
    "C_lower": ((-1, 1, -1), (-2, 1, -1), (-1, 2, -0.5), (-3, 1, -2), (-1, 0.5, -0.5)),
}

# (r, s, t, p); (3, 1, 2.5, 4) sits on p = (4t + 2s)/3 and (3, 1, 2, 3) has t < p.
THEOREM33_QUADS: Tuple[Tuple[float, float, float, float], ...] = (
    (3, 1, 2, 2),
    (3, 1, 2.5, 4),
    (3, 1, 2, 3),
    (4, 1, 2, 1),
    (5, 2, 3, 3),
    (2, 0.5, 1, 1),
    (6, 1, 3, 4),
    (1.5, 0.5, 1, 0.5),
    (10, 2, 5, 7),
    (3, 0.25, 1, 1.5),
)

# (r, p) of the s -> 0+, t = 1 limit.
THEOREM33_LIMIT_POINTS = ((2.0, 1.0), (3.0, 4.0 / 3.0), (1.5, 0.5))

COROLLARY32_PAIRS = ((-2, -1), (-1, 1), (0.25, 1), (0.5, 0.75), (0.5, 2), (0.6, 1), (1, 2))

WU_DEBNATH_ORDERS = (0.25, 0.4, 0.75, -1.0, 2.0)
# Orders where the earlier double inequality applies.
WU_PRIOR_ORDERS = (0.25, 0.4)

KERNEL_LIMIT_ORDERS = (-3.0, -0.5, 0.25, 0.75, 1.5, 3.0)

AQ_ORDERS = (2.0, 3.0, 4.0, 6.0)

LHR_POINTS = ((0.3, 1.5), (-1.5, 1.0), (2.5, 2.0), (1.5, 3.0))

REGION_POINTS = 200
# Sampled (r, q) keep this distance from every boundary line of the plane.
REGION_MARGIN = 0.1
REGION_BOX = (-2.0, 3.0)
REGION_MONOTONE_GRID = np.geomspace(2.0**-6, 2.0**4, 201)
REGION_SIGN_GRID = np.geomspace(2.0**-6, 2.0**6, 241)

KERNEL_TRIPLES = 1000
KERNEL_GRID = np.geomspace(1e-2, 20.0, 32)
KERNEL_TOLERANCE = 1e-10


# Seeded parameter draws; exponents keep this distance from zero and from each other.
DRAW_MARGIN = 0.2
THEOREM31_DRAWS = 5
THEOREM31_ST_BOX = (-3.0, 3.0)
THEOREM31_P_BOX = (-4.0, 4.0)
THEOREM33_DRAWS = 10


def theorem31_draws(cfg: SampleConfig, per_case: int = THEOREM31_DRAWS) -> Dict[Theorem31Case, List[ExponentTriple]]:
    """Seeded (s, t, p) triples, ``per_case`` inside each covered branch."""

    rng = sampling.chunk_rng(cfg.seed, 2)
    drawn: Dict[Theorem31Case, List[ExponentTriple]] = {
        case: [] for case in Theorem31Case if case is not Theorem31Case.NOT_COVERED
    }
    while any(len(triples) < per_case for triples in drawn.values()):
        s, t = sorted(round(float(v), 3) for v in rng.uniform(*THEOREM31_ST_BOX, size=2))
        p = round(float(rng.uniform(*THEOREM31_P_BOX)), 3)
        if min(abs(s), abs(t), abs(p), t - s) < DRAW_MARGIN:
            continue
        params = ExponentTriple(s, t, p)
        case = regions.theorem31_case(params).case
        if case is not Theorem31Case.NOT_COVERED and len(drawn[case]) < per_case:
            drawn[case].append(params)
    return drawn


def theorem33_draws(cfg: SampleConfig, count: int = THEOREM33_DRAWS) -> List[QuadExponents]:
    """Seeded quads with 0 < s < t < r and 0 < p <= (4t + 2s)/3."""

    rng = sampling.chunk_rng(cfg.seed, 3)
    quads: List[QuadExponents] = []
    while len(quads) < count:
        s = round(float(rng.uniform(DRAW_MARGIN, 2.0)), 3)
        t = round(s + float(rng.uniform(DRAW_MARGIN, 2.0)), 3)
        r = round(t + float(rng.uniform(DRAW_MARGIN, 3.0)), 3)
        p = round(float(rng.uniform(0.1, (4 * t + 2 * s) / 3)), 3)
        params = QuadExponents(r, s, t, p)
        if regions.theorem33_applicable(params):
            quads.append(params)
    return quads


def _labelled(report: VerificationReport, label: str) -> VerificationReport:
    return report.model_copy(update={"label": label})


# ---------------------------------------------------------------------------
# Bound containment suites
# ---------------------------------------------------------------------------


def theorem31_suite(cfg: SampleConfig) -> List[VerificationReport]:
    """Containment on the seeded draws, then containment and sharpness on the fixed triples."""

    reports = []
    for case, drawn in theorem31_draws(cfg).items():
        for params in drawn:
            spec = verifier.rho_spec(params)
            contained = verifier.verify_containment(bounds.theorem31_bounds(params), spec, cfg)
            reports.append(_labelled(contained, f"{case.value} drawn {spec.name}"))
    for case, triples in THEOREM31_TRIPLES.items():
        for s, t, p in triples:
            params = ExponentTriple(s, t, p)
            spec = verifier.rho_spec(params)
            contained = verifier.verify_containment(bounds.theorem31_bounds(params), spec, cfg)
            reports.append(_labelled(contained, f"{case} {spec.name}"))
            reports.append(verifier.verify_sharpness(params))
    return reports


def theorem33_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = []
    fixed = [QuadExponents(r, s, t, p) for r, s, t, p in THEOREM33_QUADS]
    for params in theorem33_draws(cfg) + fixed:
        report = verifier.verify_containment(bounds.theorem33_bounds(params), verifier.general_spec(params), cfg)
        if not regions.theorem33_old_condition(params):
            report = report.model_copy(update={"notes": report.notes + ["beyond p <= t"]})
        reports.append(report)
    for r, p in THEOREM33_LIMIT_POINTS:
        spec = verifier.mean_gap_spec(r, 1.0, p)
        reports.append(verifier.verify_containment(bounds.theorem33_limit_bounds(r, p), spec, cfg))
    return reports


def corollary32_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = []
    for s, t in COROLLARY32_PAIRS:
        case = regions.corollary32_case(s, t)
        spec = verifier.rho_spec(ExponentTriple(s, t, 1.0))
        report = verifier.verify_containment(bounds.corollary32_bounds(s, t), spec, cfg)
        reports.append(_labelled(report, f"{case.value} {spec.name}"))
    return reports


def _wu_refinement_report(r: float, cfg: SampleConfig) -> VerificationReport:
    """Containment in the earlier bounds, with the sharp upper bound r counted against them."""

    prior = bounds.wu_prior_bounds(r)
    sharp = bounds.wu_debnath_bounds(r)
    report = verifier.verify_containment(prior, verifier.mean_gap_spec(r, 1.0, 1.0), cfg)
    refines = prior.lower <= sharp.lower and sharp.upper < prior.upper
    note = f"sharp upper {sharp.upper:g} < earlier upper {prior.upper:.6g}"
    return report.model_copy(
        update={
            "label": f"earlier {report.label}",
            "checked": report.checked + 1,
            "violations": report.violations + int(not refines),
            "notes": report.notes + [note if refines else f"not refined: {note}"],
        }
    )


def wu_debnath_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = [
        verifier.verify_containment(bounds.wu_debnath_bounds(s), verifier.mean_gap_spec(s, 1.0, 1.0), cfg)
        for s in WU_DEBNATH_ORDERS
    ]
    reports.extend(_wu_refinement_report(r, cfg) for r in WU_PRIOR_ORDERS)
    return reports


# ---------------------------------------------------------------------------
# Identric mean constants
# ---------------------------------------------------------------------------


def _extrema_report(label: str, extrema: search.Extrema, expected: Tuple[float, float]) -> VerificationReport:
    deviations = (abs(extrema.inf - expected[0]), abs(extrema.sup - expected[1]))
    notes = [] if extrema.converged else ["search did not converge"]
    return VerificationReport(
        label=label,
        checked=2,
        violations=sum(1 for gap in deviations if gap > CONSTANT_ACCURACY),
        worst_margin=CONSTANT_ACCURACY - max(deviations),
        min_observed=extrema.inf,
        max_observed=extrema.sup,
        witness_min=_pair_witness(extrema.x_inf, extrema.inf),
        witness_max=_pair_witness(extrema.x_sup, extrema.sup),
        notes=notes,
    )


def _pair_witness(y: float, value: float) -> Dict[str, float]:
    return {"a": math.exp(y), "b": math.exp(-y), "value": value}


def alzer_qiu_suite(cfg: SampleConfig) -> List[VerificationReport]:
    spec = verifier.intro_spec(1.0)
    extrema = verifier.empirical_extrema(spec, _search_config(cfg))
    report = _extrema_report(f"extrema {spec.name}", extrema, (ALZER_QIU_LOWER, ALZER_QIU_UPPER))
    contained = verifier.verify_containment(BoundPair(ALZER_QIU_LOWER, ALZER_QIU_UPPER), spec, cfg)
    return [report, contained]


def trif_suite(cfg: SampleConfig) -> List[VerificationReport]:
    return [
        verifier.verify_containment(BoundPair((2.0 / math.e) ** p, ALZER_QIU_LOWER), verifier.intro_spec(p), cfg)
        for p in TRIF_EXPONENTS
    ]


def kouba_suite(cfg: SampleConfig) -> List[VerificationReport]:
    """Both-sided witnesses between the thresholds, one-sided bounds at them."""

    spec = verifier.intro_spec(KOUBA_ORDER)
    extrema = verifier.empirical_extrema(spec, _search_config(cfg))
    below = ALZER_QIU_LOWER - extrema.inf
    above = extrema.sup - ALZER_QIU_LOWER
    both_sides = VerificationReport(
        label=f"two-sided {spec.name}",
        checked=2,
        violations=int(not below > 0) + int(not above > 0),
        worst_margin=min(below, above),
        min_observed=extrema.inf,
        max_observed=extrema.sup,
        witness_min=_pair_witness(extrema.x_inf, extrema.inf),
        witness_max=_pair_witness(extrema.x_sup, extrema.sup),
    )
    at_lower = verifier.verify_containment(
        BoundPair(ALZER_QIU_LOWER, math.inf, sharp=False),
        verifier.intro_spec(KOUBA_LOWER_THRESHOLD),
        cfg,
    )
    p_upper = math.ceil(KOUBA_UPPER_THRESHOLD * 100) / 100
    at_upper = verifier.verify_containment(
        BoundPair(-math.inf, ALZER_QIU_LOWER, sharp=False),
        verifier.intro_spec(p_upper),
        cfg,
    )
    return [both_sides, at_lower, at_upper]


def _search_config(cfg: SampleConfig) -> verifier.SearchConfig:
    base = verifier.SearchConfig.from_settings()
    return verifier.SearchConfig(
        x_min=cfg.x_min,
        x_max=cfg.x_max,
        starts=base.starts,
        tol=base.tol,
        max_iter=base.max_iter,
    )


# ---------------------------------------------------------------------------
# The (r, q) plane
# ---------------------------------------------------------------------------


def _near_boundary(r: float, q: float) -> bool:
    lines = (q - 2 * r, q - 2.0 * (r + 1.0) / 3.0, q - 2.0, q)
    if any(abs(gap) < REGION_MARGIN for gap in lines):
        return True
    return any(abs(r - edge) < REGION_MARGIN for edge in (-1.0, 0.0, 0.5, 1.0, 2.0))


def region_points(cfg: SampleConfig, count: int = REGION_POINTS) -> List[RQPoint]:
    """Seeded (r, q) points of the box kept away from the region boundaries."""

    rng = sampling.chunk_rng(cfg.seed, 0)
    points: List[RQPoint] = []
    while len(points) < count:
        r, q = rng.uniform(*REGION_BOX, size=2)
        if not _near_boundary(float(r), float(q)):
            points.append(RQPoint(round(float(r), 6), round(float(q), 6)))
    return points


def _region_report(point: RQPoint, tolerance: float) -> VerificationReport:
    expected = regions.classify_g(point)
    label = f"g(r={point.r:g},q={point.q:g}) {expected.short}"
    if expected is MonotonicityClass.NEITHER:
        signs = np.asarray(kernels.h_sign(point, REGION_SIGN_GRID))
        changed = bool(np.any(signs > 0) and np.any(signs < 0))
        if not changed:
            logger.warning("no sign change of H label=%s", label)
        return VerificationReport(label=label, checked=int(signs.size), violations=int(not changed), worst_margin=1.0)
    values = np.asarray(kernels.g_func(point, REGION_MONOTONE_GRID), dtype=float)
    return verifier.direction_report(REGION_MONOTONE_GRID, values, expected, tolerance, label=label)


def regions_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = [_region_report(point, cfg.tolerance) for point in region_points(cfg)]
    # G_{1/2,1} is 1/2 and G_{2,2} is 2, i.e. the constant equals r.
    for r, q in ((0.5, 1.0), (2.0, 2.0)):
        point = RQPoint(r, q)
        kernel = verifier.g_kernel(point)
        expected = MonotonicityClass.CONSTANT
        report = verifier.direction_report(
            REGION_MONOTONE_GRID, kernel.fn(REGION_MONOTONE_GRID), expected, cfg.tolerance, label=kernel.name
        )
        off = max(abs(report.min_observed - r), abs(report.max_observed - r))
        if off > cfg.tolerance * max(1.0, r):
            report = report.model_copy(update={"violations": report.violations + 1, "notes": [f"constant off by {off!r}"]})
        reports.append(report)
    return reports


# ---------------------------------------------------------------------------
# A_q and the S / P_n positivity grids
# ---------------------------------------------------------------------------


def _s_func_grid_report() -> VerificationReport:
    xs = np.logspace(-8.0, math.log10(20.0), 160)
    report = VerificationReport(label="S(x,t) > (2+4t)/3")
    for t in np.linspace(1.1, 6.0, 50):
        gap = np.asarray(kernels.s_excess(xs, float(t)))
        worst = int(np.argmin(gap))
        report = report.merge(
            VerificationReport(
                checked=int(xs.size),
                violations=int(np.count_nonzero(gap <= 0)),
                worst_margin=float(gap[worst]),
                min_observed=float(gap[worst]),
                max_observed=float(np.max(gap)),
                witness_min={"x": float(xs[worst]), "t": float(t)},
            )
        )
    return report


def _poly_grid_report() -> VerificationReport:
    violations = 0
    checked = 0
    smallest = math.inf
    witness = None
    for n in range(2, 13):
        for step in range(1, 41):
            delta = Fraction(step, 10)
            value = kernels.poly_p_exact(n, delta)
            checked += 1
            if value <= 0:
                violations += 1
            if value < smallest:
                smallest = float(value)
                witness = {"n": float(n), "delta": float(delta)}
    return VerificationReport(
        label="P_n(d) > 0",
        checked=checked,
        violations=violations,
        worst_margin=smallest,
        min_observed=smallest,
        witness_min=witness,
    )


def aq_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = []
    for q in AQ_ORDERS:
        result = verifier.verify_aq_boundary(q, cfg)
        report = result.membership
        notes = report.notes + result.notes + [result.threshold.describe()]
        update: Dict[str, object] = {"notes": notes}
        if result.threshold.closed:
            if result.below_witness is None:
                update["violations"] = report.violations + 1
            else:
                update["witness_max"] = result.below_witness
        reports.append(report.model_copy(update=update))
    reports.append(_s_func_grid_report())
    reports.append(_poly_grid_report())
    return reports


# ---------------------------------------------------------------------------
# Monotone rule for difference quotients
# ---------------------------------------------------------------------------


def lhr_suite(cfg: SampleConfig) -> List[VerificationReport]:
    interval = (1e-3, 20.0)
    reports = [
        verifier.verify_lhospital_rule(
            verifier.sinh_quotient_case(3.0, 2.0), interval, 0.0, cfg, MonotonicityClass.INCREASING
        )
    ]
    same = verifier.sinh_quotient_case(2.0, 2.0)
    reports.append(
        verifier.verify_lhospital_rule(
            verifier.LHRCase("identity", same.f, same.g, same.df, same.dg),
            interval,
            0.0,
            cfg,
            MonotonicityClass.CONSTANT,
        )
    )
    for r, q in LHR_POINTS:
        point = RQPoint(r, q)
        expected = regions.classify_f(point)
        if expected in (MonotonicityClass.UNKNOWN, MonotonicityClass.NEITHER):
            expected = None
        reports.append(verifier.verify_lhospital_rule(verifier.power_cosh_case(point), interval, 0.0, cfg, expected))
    for r, s, t, p in THEOREM33_QUADS:
        case = verifier.f_two_case(p / s, r / s, t / s)
        reports.append(verifier.verify_lhospital_rule(case, interval, 0.0, cfg, MonotonicityClass.DECREASING))
    return reports


# ---------------------------------------------------------------------------
# Kernel limits, H sign rows and the L kernel
# ---------------------------------------------------------------------------


def _k_tilde_limit_report(r: float, cfg: SampleConfig) -> VerificationReport:
    behaviour = kernels.k_tilde_behaviour(r)
    near = float(kernels.k_tilde(r, 1e-4))
    far = float(kernels.k_tilde(r, 20.0))
    notes = []
    if abs(near - behaviour.limit_at_zero) > 1e-4:
        notes.append(f"K~ at 0+ is {near!r}")
    if math.isfinite(behaviour.limit_at_infinity):
        if abs(far - behaviour.limit_at_infinity) > 1e-3:
            notes.append(f"K~ at 20 is {far!r}")
    elif not (abs(far) > 1e3 and math.copysign(1.0, far) == math.copysign(1.0, behaviour.limit_at_infinity)):
        notes.append(f"K~ at 20 is {far!r}")
    window = cfg.model_copy(update={"x_min": 1e-4, "x_max": 20.0, "n_samples": min(cfg.n_samples, 2000)})
    xs = verifier.sorted_sample(window)
    expected = MonotonicityClass.INCREASING if behaviour.increasing else MonotonicityClass.DECREASING
    report = verifier.direction_report(xs, kernels.k_tilde(r, xs), expected, cfg.tolerance, label=f"K~_{r:g}")
    return report.model_copy(update={"violations": report.violations + len(notes), "notes": notes})


def _h_sign_report(points: Sequence[RQPoint]) -> VerificationReport:
    report = VerificationReport(label="sign of H")
    for point in points:
        sign = regions.expected_h_sign(point.r, point.q)
        if sign is None:
            continue
        signs = np.asarray(kernels.h_sign(point, REGION_SIGN_GRID))
        wrong = int(np.count_nonzero(signs != sign))
        if wrong:
            logger.warning("H sign disagrees r=%s q=%s expected=%s", point.r, point.q, sign)
        report = report.merge(
            VerificationReport(
                checked=int(signs.size),
                violations=wrong,
                worst_margin=1.0 if not wrong else -1.0,
                witness_min={"r": point.r, "q": point.q} if wrong else None,
            )
        )
    return report


def _kernel_triples(cfg: SampleConfig, count: int) -> List[KernelTriple]:
    rng = sampling.chunk_rng(cfg.seed, 1)
    triples: List[KernelTriple] = []
    while len(triples) < count:
        alpha, beta, gamma = (float(v) for v in rng.uniform(-3.0, 3.0, size=3))
        mags = sorted((abs(alpha), abs(beta), abs(gamma)))
        if mags[1] - mags[0] < 0.1 or mags[2] - mags[1] < 0.1:
            continue
        triples.append(KernelTriple(alpha, beta, gamma))
    return triples


def _l_identity_errors(triple: KernelTriple, xs: np.ndarray) -> Dict[str, np.ndarray]:
    """Relative errors of the three index identities of L on ``xs``.

    u -> u/(u-1) is an involution and (L - 1)(L' - 1) = 1, so the map is
    applied to whichever of L, L' lies at least 1 away from 1.
    """

    a, b, c = triple.alpha, triple.beta, triple.gamma
    values = np.asarray(kernels.l_kernel(triple, xs), dtype=float)
    swapped = np.asarray(kernels.l_kernel(KernelTriple(a, c, b), xs), dtype=float)
    inverse = np.asarray(kernels.l_kernel(KernelTriple(b, a, c), xs), dtype=float)
    turned = np.asarray(kernels.l_kernel(KernelTriple(c, b, a), xs), dtype=float)
    scale = np.maximum(1.0, np.abs(values))
    from_turned = np.abs(turned - 1.0) >= 1.0
    predicted = np.where(from_turned, turned / (turned - 1.0), values / (values - 1.0))
    target = np.where(from_turned, values, turned)
    return {
        "1 - L(a,c,b)": np.abs(values - (1.0 - swapped)) / scale,
        "L(a,b,c) L(b,a,c)": np.abs(values * inverse - 1.0),
        "L'/(L'-1)": np.abs(predicted - target) / np.maximum(1.0, np.abs(target)),
    }


def kernel_identity_report(cfg: SampleConfig, count: int = KERNEL_TRIPLES) -> VerificationReport:
    """The index identities of L, and L moving in the direction given by Delta."""

    report = VerificationReport(label="L kernel identities")
    for triple in _kernel_triples(cfg, count):
        where = {"alpha": triple.alpha, "beta": triple.beta, "gamma": triple.gamma}
        for name, error in _l_identity_errors(triple, KERNEL_GRID).items():
            worst = int(np.argmax(error))
            identity = VerificationReport(
                checked=int(error.size),
                violations=int(np.count_nonzero(error > KERNEL_TOLERANCE)),
                worst_margin=float(KERNEL_TOLERANCE - error[worst]),
            )
            if identity.violations:
                identity = identity.model_copy(
                    update={"witness_max": {**where, "x": float(KERNEL_GRID[worst])}, "notes": [name]}
                )
            report = report.merge(identity)
        values = np.asarray(kernels.l_kernel(triple, KERNEL_GRID), dtype=float)
        expected = MonotonicityClass.INCREASING if kernels.delta_sign(triple) > 0 else MonotonicityClass.DECREASING
        direction = verifier.direction_report(KERNEL_GRID, values, expected, KERNEL_TOLERANCE)
        if direction.violations:
            direction = direction.model_copy(update={"witness_min": where})
        report = report.merge(direction)
    return report


def kernels_suite(cfg: SampleConfig) -> List[VerificationReport]:
    reports = [_k_tilde_limit_report(r, cfg) for r in KERNEL_LIMIT_ORDERS]
    reports.append(_h_sign_report(region_points(cfg)))
    reports.append(kernel_identity_report(cfg))
    return reports


SUITES: Dict[VerifyTarget, Callable[[SampleConfig], List[VerificationReport]]] = {
    VerifyTarget.THM31: theorem31_suite,
    VerifyTarget.THM33: theorem33_suite,
    VerifyTarget.COR32: corollary32_suite,
    VerifyTarget.WU_DEBNATH: wu_debnath_suite,
    VerifyTarget.ALZER_QIU: alzer_qiu_suite,
    VerifyTarget.TRIF: trif_suite,
    VerifyTarget.KOUBA: kouba_suite,
    VerifyTarget.REGIONS: regions_suite,
    VerifyTarget.AQ: aq_suite,
    VerifyTarget.LHR: lhr_suite,
    VerifyTarget.KERNELS: kernels_suite,
}


def run_target(target: VerifyTarget, cfg: SampleConfig) -> SuiteResult:
    logger.info("suite start target=%s seed=%s samples=%s", target.value, cfg.seed, cfg.n_samples)
    result = SuiteResult(target=target, reports=SUITES[target](cfg))
    logger.info("suite done target=%s reports=%s violations=%s", target.value, len(result.reports), result.violations)
    return result
