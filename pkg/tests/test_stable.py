from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from app.services import stable


def test_log_cosh_is_exact_in_both_regimes() -> None:
    assert stable.log_cosh(1e-8) == pytest.approx(5e-17, rel=1e-12)
    assert stable.log_cosh(800.0) == pytest.approx(800.0 - math.log(2.0), rel=1e-15)
    assert stable.log_cosh(-3.0) == pytest.approx(math.log(math.cosh(3.0)), rel=1e-15)


def test_log_sinh_switches_to_asymptotic_form_without_overflow() -> None:
    assert stable.log_sinh(5.0) == pytest.approx(math.log(math.sinh(5.0)), rel=1e-15)
    assert stable.log_sinh(1000.0) == pytest.approx(1000.0 - math.log(2.0), rel=1e-15)
    assert float(mpmath.log(mpmath.sinh(25))) == pytest.approx(stable.log_sinh(25.0), rel=1e-15)


def test_log_cosh_gap_series_agrees_with_direct_form() -> None:
    z = 1e-3
    expected = float(mpmath.log(mpmath.cosh(3 * mpmath.mpf(z))) / 3 - mpmath.log(mpmath.cosh(mpmath.mpf(z))))
    assert stable.log_cosh_gap(3.0, 1.0, z, cutoff=1e-2) == pytest.approx(expected, rel=1e-12)
    assert stable.log_cosh_gap(3.0, 1.0, z, cutoff=1e-4) == pytest.approx(expected, rel=1e-9)


def test_xcoth_minus_one_uses_series_for_small_arguments() -> None:
    assert stable.xcoth_minus_one(1e-3) == pytest.approx(1e-6 / 3, rel=1e-9)
    assert stable.xcoth_minus_one(0.0) == 0.0
    assert stable.xcoth_minus_one(2.0) == pytest.approx(2.0 / math.tanh(2.0) - 1.0, rel=1e-15)


def test_expm1_ratio_handles_tiny_and_huge_arguments() -> None:
    assert stable.expm1_ratio(1e-12, 2e-12) == pytest.approx(0.5, rel=1e-9)
    assert stable.expm1_ratio(800.0, 900.0) == pytest.approx(math.exp(-100.0), rel=1e-12)
    assert stable.expm1_ratio(-2.0, 1.0) == pytest.approx(math.expm1(-2.0) / math.expm1(1.0), rel=1e-15)


def test_as_output_keeps_scalars_scalar() -> None:
    assert isinstance(stable.as_output(np.float64(1.5), 2.0), float)
    assert stable.as_output(np.ones(3), np.zeros(3)).shape == (3,)
