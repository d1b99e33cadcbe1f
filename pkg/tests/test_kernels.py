from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from app.core.errors import DomainError
from app.core.types import KernelTriple, RQPoint
from app.services import kernels

mpmath.mp.dps = 40


def _f_oracle(r: float, q: float, x: float) -> float:
    r, q, x = mpmath.mpf(r), mpmath.mpf(q), mpmath.mpf(x)
    return float((mpmath.cosh(r * x) ** (q / r) - 1) / (mpmath.cosh(x) ** q - 1))


def _k(ell: float, x: float) -> float:
    return math.sinh(2 * ell * x) - ell * math.sinh(2 * x)


def test_l_kernel_examples() -> None:
    expected = (math.cosh(2.0) - 1.0) / (math.cosh(1.0) - 1.0)

    assert kernels.l_kernel(KernelTriple(2, 1, 0), 1.0) == pytest.approx(expected, rel=1e-13)
    assert kernels.l_kernel(KernelTriple(-2, 1, 0), 1.0) == pytest.approx(expected, rel=1e-13)
    assert kernels.l_kernel(KernelTriple(2, 0, 1), 1.0) == pytest.approx(1.0 - expected, rel=1e-13)


def test_l_kernel_does_not_overflow() -> None:
    value = kernels.l_kernel(KernelTriple(3, 2, 1), 400.0)

    assert math.isfinite(value)
    assert value == pytest.approx(math.exp(400.0), rel=1e-10)


def test_delta_sign_examples() -> None:
    assert kernels.delta_sign(KernelTriple(2, 1, 0)) == 1
    assert kernels.delta_sign(KernelTriple(1, 2, 0)) == -1
    assert kernels.delta_sign(KernelTriple(0, 2, 1)) == 1


def test_kernel_triple_needs_distinct_magnitudes() -> None:
    with pytest.raises(DomainError):
        KernelTriple(1, -1, 0)


magnitudes = st.floats(min_value=-3.0, max_value=3.0)


@given(alpha=magnitudes, beta=magnitudes, gamma=magnitudes, x=st.floats(min_value=1e-2, max_value=20.0))
def test_l_kernel_swapping_last_two_indices(alpha: float, beta: float, gamma: float, x: float) -> None:
    mags = sorted((abs(alpha), abs(beta), abs(gamma)))
    assume(mags[1] - mags[0] > 0.1 and mags[2] - mags[1] > 0.1)

    value = kernels.l_kernel(KernelTriple(alpha, beta, gamma), x)
    mirror = 1.0 - kernels.l_kernel(KernelTriple(alpha, gamma, beta), x)

    assert value == pytest.approx(mirror, rel=1e-10, abs=1e-10)


def test_l_kernel_index_identity_examples() -> None:
    value = kernels.l_kernel(KernelTriple(2, 1, 0), 1.0)
    turned = kernels.l_kernel(KernelTriple(0, 1, 2), 1.0)

    assert kernels.l_kernel(KernelTriple(1, 2, 0), 1.0) == pytest.approx(1.0 / value, rel=1e-13)
    assert turned == pytest.approx((1.0 - math.cosh(2.0)) / (math.cosh(1.0) - math.cosh(2.0)), rel=1e-13)
    assert value == pytest.approx(turned / (turned - 1.0), rel=1e-12)


@given(alpha=magnitudes, beta=magnitudes, gamma=magnitudes, x=st.floats(min_value=1e-2, max_value=20.0))
def test_l_kernel_inverse_and_turned_identities(alpha: float, beta: float, gamma: float, x: float) -> None:
    mags = sorted((abs(alpha), abs(beta), abs(gamma)))
    assume(mags[1] - mags[0] > 0.1 and mags[2] - mags[1] > 0.1)

    value = kernels.l_kernel(KernelTriple(alpha, beta, gamma), x)
    inverse = kernels.l_kernel(KernelTriple(beta, alpha, gamma), x)
    turned = kernels.l_kernel(KernelTriple(gamma, beta, alpha), x)

    assert value * inverse == pytest.approx(1.0, rel=1e-10)
    # u -> u/(u-1) is its own inverse; map from the side at least 1 away from 1.
    if abs(turned - 1.0) >= 1.0:
        assert value == pytest.approx(turned / (turned - 1.0), rel=1e-10)
    else:
        assert turned == pytest.approx(value / (value - 1.0), rel=1e-10)


def test_l_kernel_direction_follows_delta() -> None:
    xs = np.geomspace(1e-2, 8.0, 64)
    for triple in (KernelTriple(2, 1, 0), KernelTriple(1, 2, 0), KernelTriple(0, 2, 1), KernelTriple(3, 0.5, 2)):
        diffs = np.diff(kernels.l_kernel(triple, xs))
        if kernels.delta_sign(triple) > 0:
            assert np.all(diffs >= 0)
        else:
            assert np.all(diffs <= 0)


def test_k_func_examples() -> None:
    assert np.all(kernels.k_func(1.0, np.array([0.1, 1.0, 10.0])) == 0.0)
    assert kernels.k_func(2.0, 1.0) == pytest.approx(math.sinh(4.0) - 2.0 * math.sinh(2.0), rel=1e-13)
    assert kernels.k_func(0.5, 1.0) == pytest.approx(_k(0.5, 1.0), rel=1e-13)
    assert kernels.k_func(0.5, 1e-3) == pytest.approx(_k(0.5, 1e-3), rel=1e-6)


def test_k_tilde_limits_at_zero_and_infinity() -> None:
    assert kernels.k_tilde(3.0, 1e-4) == pytest.approx(0.75, abs=1e-6)
    assert kernels.k_tilde(3.0, 20.0) == pytest.approx(1.0, abs=1e-6)
    # The approach to 1/r is slow for small r: at x = 20 the gap is about 2e-4.
    assert kernels.k_tilde(0.25, 20.0) == pytest.approx(4.0, abs=1e-3)
    for r in (-3.0, -0.5, 0.25, 0.75, 1.5, 3.0):
        behaviour = kernels.k_tilde_behaviour(r)
        assert kernels.k_tilde(r, 1e-4) == pytest.approx(behaviour.limit_at_zero, abs=1e-4)
        if math.isfinite(behaviour.limit_at_infinity):
            assert kernels.k_tilde(r, 20.0) == pytest.approx(behaviour.limit_at_infinity, abs=1e-3)


def test_k_tilde_rejects_degenerate_orders() -> None:
    for r in kernels.K_TILDE_EXCLUDED:
        with pytest.raises(DomainError):
            kernels.k_tilde(r, 1.0)


def test_h_func_examples() -> None:
    three_k2 = 3.0 * _k(2.0, 1.0)

    assert kernels.h_func(RQPoint(-1, 3), 1.0) == pytest.approx(three_k2, rel=1e-12)
    assert kernels.h_func(RQPoint(2, 5), 1.0) == pytest.approx(three_k2, rel=1e-12)
    assert np.allclose(kernels.h_func(RQPoint(0.5, 1), np.array([0.5, 1.0, 3.0])), 0.0, atol=1e-12)


def test_h_factorizes_through_a_and_b() -> None:
    xs = np.array([0.05, 0.7, 4.0])
    for r, q in ((3.0, 1.0), (0.3, 1.5), (-1.5, 2.0), (1.5, -0.5)):
        a = kernels.a_func(r, xs)
        b = kernels.b_func(r, xs)
        h = kernels.h_func(RQPoint(r, q), xs)
        scale = np.abs(a) * (abs(q) + np.abs(b))
        assert np.all(np.abs(h - a * (q - b)) <= 1e-8 * scale)


def test_h_sign_matches_the_slope_of_g() -> None:
    step = 1e-5
    for r, q in ((0.3, 1.5), (-1.5, 1.0), (2.5, 3.0), (0.3, 0.7), (1.5, 1.9)):
        point = RQPoint(r, q)
        for x in (0.2, 0.8, 2.0, 5.0):
            slope = (kernels.g_func(point, x + step) - kernels.g_func(point, x - step)) / (2 * step)
            if abs(slope) < 1e-7:
                continue
            assert kernels.h_sign(point, x) == math.copysign(1.0, slope)


def test_g_func_examples() -> None:
    xs = np.array([0.1, 1.0, 10.0])
    expected = math.sqrt(math.cosh(2.0)) * math.tanh(2.0) / (math.cosh(1.0) * math.tanh(1.0))

    assert np.allclose(kernels.g_func(RQPoint(0.5, 1), xs), 0.5, rtol=1e-12, atol=0.0)
    assert np.allclose(kernels.g_func(RQPoint(2, 2), xs), 2.0, rtol=1e-12, atol=0.0)
    assert kernels.g_func(RQPoint(2, 1), 1.0) == pytest.approx(expected, rel=1e-12)
    assert math.isfinite(kernels.g_func(RQPoint(3, 5), 300.0))


def test_g_func_carries_the_sign_of_r() -> None:
    assert kernels.g_func(RQPoint(-1.5, 1), 1.0) < 0
    assert kernels.g_func(RQPoint(1.5, 1), 1.0) > 0


def test_f_func_matches_high_precision_and_is_cancellation_safe() -> None:
    for r, q in ((0.3, 1.5), (-1.5, 1.0), (2.5, 2.0), (-2.0, -1.0)):
        point = RQPoint(r, q)
        for x in (1e-6, 1e-4, 5e-3, 0.7, 6.0):
            assert kernels.f_func(point, x) == pytest.approx(_f_oracle(r, q, x), rel=1e-9)


def test_f_limits_agree_with_far_values() -> None:
    for r, q in ((2.5, 2.0), (-1.5, 1.0), (0.5, -1.0)):
        point = RQPoint(r, q)
        at_zero, at_infinity = kernels.f_limits(point)
        assert kernels.f_func(point, 1e-6) == pytest.approx(at_zero, abs=1e-9)
        assert kernels.f_func(point, 60.0) == pytest.approx(at_infinity, abs=1e-9)
    assert kernels.f_limits(RQPoint(-1, -1)) == (-1, -math.inf)


def test_r_func_and_its_t_derivative() -> None:
    q, x, t = 1.0, 1.0, 2.0
    expected = 1.0 / math.tanh(1.0) - 2.0 * math.tanh(1.0) - math.tanh(2.0)

    assert kernels.r_func(q, x, t) == pytest.approx(expected, rel=1e-14)
    for q, x, t in ((1.0, 1.0, 2.0), (4.0, 0.3, 2.5), (6.0, 2.0, 3.5)):
        h = 1e-5
        numeric = (kernels.r_func(q, x, t + h) - kernels.r_func(q, x, t - h)) / (2 * h)
        assert kernels.dr_dt(q, x, t) == pytest.approx(numeric, rel=1e-5, abs=1e-9)


def _s_excess_oracle(x: float, t: float) -> float:
    with mpmath.workdps(90):
        x, t = mpmath.mpf(x), mpmath.mpf(t)
        d = t - 1
        s = t + d * mpmath.cosh(t * x) ** 2 / mpmath.sinh(d * x) ** 2 - mpmath.cosh(x) * mpmath.cosh(t * x) / (
            x * mpmath.sinh(d * x)
        )
        return float(s - (2 + 4 * t) / 3)


def test_s_func_limit_and_lower_bound() -> None:
    for t in (1.5, 2.5, 4.0):
        assert kernels.s_func(1e-3, t) == pytest.approx(kernels.s_limit_at_zero(t), abs=1e-4)
    xs = np.logspace(-8.0, math.log10(20.0), 200)
    for t in np.linspace(1.1, 6.0, 50):
        assert np.all(kernels.s_excess(xs, float(t)) > 0)
        assert np.all(kernels.s_func(xs, float(t)) >= kernels.s_limit_at_zero(float(t)))


@pytest.mark.parametrize("t", [1.1, 1.5, 2.5, 5.0])
@pytest.mark.parametrize("x", [1e-8, 1e-6, 1e-5, 3e-4, 1e-2, 0.15, 0.9, 3.0, 12.0])
def test_s_excess_matches_high_precision(x: float, t: float) -> None:
    assert kernels.s_excess(x, t) == pytest.approx(_s_excess_oracle(x, t), rel=1e-9)


def test_s_excess_is_continuous_at_the_series_switch() -> None:
    for t in (1.1, 2.0, 4.5):
        edge = 1.0 / t
        below = kernels.s_excess(edge * (1 - 1e-9), t)
        above = kernels.s_excess(edge * (1 + 1e-9), t)
        assert below == pytest.approx(above, rel=1e-8)


def test_s_func_stays_finite_or_infinite_at_large_x() -> None:
    values = kernels.s_func(np.array([100.0, 400.0]), 2.0)

    assert math.isfinite(values[0]) and values[0] > 0
    assert values[1] == math.inf
    assert kernels.dr_dt(3.0, 400.0, 2.0) <= 0


def test_poly_p_values() -> None:
    assert kernels.poly_p_exact(2, 1) == 124
    assert kernels.poly_p_exact(3, 0) == 0
    for n in range(2, 13):
        for step in range(1, 41):
            assert kernels.poly_p_exact(n, Fraction(step, 10)) > 0
    with pytest.raises(DomainError):
        kernels.poly_p(1, 0.5)
    with pytest.raises(DomainError):
        kernels.poly_p(2, -0.5)


def test_f_two_range_and_derivative() -> None:
    q, v = 2.0, 3.0
    expected = float((mpmath.cosh(3) ** (mpmath.mpf(1) / 3) / mpmath.cosh(1)) ** 2)

    assert kernels.f_two(q, 0.0, v) == 1.0
    assert kernels.f_two(q, 1.0, v) == pytest.approx(expected, rel=1e-13)
    assert kernels.f_two(q, 60.0, v) == pytest.approx(2.0 ** (q - q / v), rel=1e-12)
    for x in (0.1, 1.0, 4.0):
        h = 1e-6
        numeric = (kernels.f_two(q, x + h, v) - kernels.f_two(q, x - h, v)) / (2 * h)
        assert kernels.f_two_dx(q, x, v) == pytest.approx(numeric, rel=1e-6)


def test_f_two_quotient_limits() -> None:
    q, ell, k = 2.0, 3.0, 2.0
    at_zero, at_infinity = kernels.f_two_quotient_limits(q, ell, k)

    assert at_zero == 2.0
    assert kernels.f_two_quotient(q, 1e-6, ell, k) == pytest.approx(at_zero, abs=1e-9)
    assert kernels.f_two_quotient(q, 60.0, ell, k) == pytest.approx(at_infinity, rel=1e-12)
    assert at_infinity == pytest.approx((2.0 ** (4.0 / 3.0) - 1.0) / (2.0 - 1.0), rel=1e-14)


def test_kernels_reject_non_positive_x() -> None:
    with pytest.raises(DomainError):
        kernels.g_func(RQPoint(0.3, 1.5), 0.0)
    with pytest.raises(DomainError):
        kernels.k_func(2.0, np.array([1.0, -1.0]))
