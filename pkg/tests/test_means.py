from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.errors import DomainError
from app.core.types import ExponentTriple, PositivePair, QuadExponents, RQPoint
from app.services import kernels, means

mpmath.mp.dps = 50


def _power_mean(order: float, a: float, b: float) -> mpmath.mpf:
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    if order == 0:
        return mpmath.sqrt(a * b)
    r = mpmath.mpf(order)
    return ((a**r + b**r) / 2) ** (1 / r)


def _identric(a: float, b: float) -> mpmath.mpf:
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    return mpmath.exp((a * mpmath.log(a) - b * mpmath.log(b)) / (a - b) - 1)


def _gap_ratio(num, den, p: float, a: float, b: float) -> float:
    p = mpmath.mpf(p)
    return float((num**p - _power_mean(0, a, b) ** p) / (den**p - _power_mean(0, a, b) ** p))


def _rho(params: ExponentTriple, a: float, b: float) -> float:
    return _gap_ratio(_power_mean(params.s, a, b), _power_mean(params.t, a, b), params.p, a, b)


PAIRS = ((1.0, 2.0), (0.3, 7.0), (5.0, 4.999), (1e-3, 5e2))


def test_power_mean_known_values() -> None:
    pair = PositivePair(1.0, 2.0)

    assert means.power_mean(2.0, pair) == pytest.approx(math.sqrt(2.5), rel=1e-14)
    assert means.power_mean(-1.0, pair) == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert means.geometric_mean(pair) == pytest.approx(math.sqrt(2.0), rel=1e-14)
    assert means.arithmetic_mean(pair) == pytest.approx(1.5, rel=1e-14)
    assert means.identric_mean(pair) == pytest.approx(4.0 / math.e, rel=1e-14)


def test_power_mean_grows_with_its_order() -> None:
    pair = PositivePair(1.0, 3.0)
    values = [means.power_mean(order, pair) for order in (-3.0, -1.0, 0.0, 0.5, 1.0, 2.0, 5.0)]

    assert values == sorted(values)
    assert len(set(values)) == len(values)


def test_power_mean_many_broadcasts() -> None:
    a = np.array([1.0, 2.0, 10.0])
    b = np.array([2.0, 2.5, 0.1])
    out = means.power_mean_many(3.0, a, b)

    assert out.shape == (3,)
    for value, x, y in zip(out, a, b):
        assert value == pytest.approx(float(_power_mean(3.0, x, y)), rel=1e-13)


@given(
    a=st.floats(min_value=1e-6, max_value=1e6),
    b=st.floats(min_value=1e-6, max_value=1e6),
    order=st.floats(min_value=-20.0, max_value=20.0),
)
def test_power_mean_lies_between_the_pair(a: float, b: float, order: float) -> None:
    value = float(means.power_mean_many(order, a, b))

    assert min(a, b) * (1 - 1e-12) <= value <= max(a, b) * (1 + 1e-12)


def test_ratio_rho_matches_high_precision() -> None:
    for s, t, p in ((1, 2, 1), (-1, 1, 1), (0.5, 2, 2), (-3, -1, -1), (-1, 2, -0.5)):
        params = ExponentTriple(s, t, p)
        for a, b in PAIRS:
            assert means.ratio_rho(params, PositivePair(a, b)) == pytest.approx(_rho(params, a, b), rel=1e-9)


def test_ratio_general_matches_high_precision() -> None:
    for r, s, t, p in ((3, 1, 2, 2), (3, 1, 2.5, 4), (10, 2, 5, 7)):
        params = QuadExponents(r, s, t, p)
        for a, b in PAIRS:
            expected = (_power_mean(r, a, b) ** p - _power_mean(s, a, b) ** p) / (
                _power_mean(t, a, b) ** p - _power_mean(s, a, b) ** p
            )
            assert means.ratio_general(params, PositivePair(a, b)) == pytest.approx(float(expected), rel=1e-9)


def test_intro_ratio_matches_high_precision() -> None:
    for p in (1.0, 1.25, 2.0):
        for a, b in PAIRS:
            expected = _gap_ratio(_identric(a, b), _power_mean(1, a, b), p, a, b)
            assert means.intro_ratio(p, PositivePair(a, b)) == pytest.approx(expected, rel=1e-9)


def test_ratios_tend_to_their_order_ratio_as_the_pair_merges() -> None:
    pair = PositivePair(1.0 + 1e-9, 1.0)

    assert means.ratio_rho(ExponentTriple(1, 2, 1), pair) == pytest.approx(0.5, abs=1e-6)
    assert means.ratio_rho(ExponentTriple(-3, -1, 2), pair) == pytest.approx(3.0, abs=1e-6)
    assert means.intro_ratio(1.0, pair) == pytest.approx(2.0 / 3.0, abs=1e-6)


def test_half_order_gap_is_half_of_the_arithmetic_gap() -> None:
    a = np.array([1.0, 0.2, 3.0, 1e-3])
    b = np.array([2.0, 9.0, 3.1, 1e3])

    out = means.mean_gap_ratio_many(0.5, 1.0, 1.0, a, b)

    assert np.allclose(out, 0.5, rtol=1e-12, atol=0.0)


@settings(max_examples=60)
@given(
    y=st.floats(min_value=1e-3, max_value=10.0),
    exponent=st.floats(min_value=-6.0, max_value=6.0),
)
def test_ratio_rho_is_symmetric_and_homogeneous(y: float, exponent: float) -> None:
    params = ExponentTriple(0.5, 2.0, 2.0)
    pair = PositivePair.from_log_ratio(y)
    base = means.ratio_rho(params, pair)

    assert means.ratio_rho(params, pair.swapped()) == pytest.approx(base, rel=1e-12)
    assert means.ratio_rho(params, pair.scaled(10.0**exponent)) == pytest.approx(base, rel=1e-12)


@pytest.mark.parametrize("scale", [10.0**k for k in range(-6, 7)])
def test_every_ratio_is_homogeneous_of_degree_zero(scale: float) -> None:
    quad = QuadExponents(3.0, 1.0, 2.0, 3.0)
    for a, b in ((1.0, 4.0), (0.3, 7.5), (2.0, 2.001), (1e-3, 50.0)):
        pair = PositivePair(a, b)
        scaled = pair.scaled(scale)
        assert means.ratio_rho(ExponentTriple(1, 2, 1), scaled) == pytest.approx(
            means.ratio_rho(ExponentTriple(1, 2, 1), pair), rel=1e-12
        )
        assert means.ratio_general(quad, scaled) == pytest.approx(means.ratio_general(quad, pair), rel=1e-12)
        assert means.intro_ratio(1.0, scaled) == pytest.approx(means.intro_ratio(1.0, pair), rel=1e-12)


def test_normalized_ratio_equals_the_f_kernel() -> None:
    for s, t, p in ((1, 2, 1), (-1, 1, -1), (-2, -1, -3), (0.25, 1, 1)):
        params = ExponentTriple(s, t, p)
        point = RQPoint(s / t, p / t)
        for y in (0.01, 0.5, 3.0):
            assert means.normalized_ratio_rho(params, y) == pytest.approx(
                kernels.f_func(point, abs(t) * y), rel=1e-10
            )


def test_equal_or_invalid_pairs_are_rejected() -> None:
    params = ExponentTriple(1, 2, 1)

    with pytest.raises(DomainError):
        means.ratio_rho_many(params, 2.0, 2.0)
    with pytest.raises(DomainError):
        PositivePair(1.0, 1.0)
    with pytest.raises(DomainError):
        PositivePair(-1.0, 2.0)
    with pytest.raises(DomainError):
        means.power_mean_many(1.0, np.array([1.0, -2.0]), np.array([2.0, 3.0]))
    with pytest.raises(DomainError):
        means.intro_ratio(0.0, PositivePair(1.0, 2.0))
