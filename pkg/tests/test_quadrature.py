import logging
import math

import numpy as np
import pytest
from scipy.special import betaln

from hydrocomplex.core import DomainError, QuadratureAccuracyError
from hydrocomplex.quadrature import (
    Estimate,
    QuadratureSpec,
    TailEnvelope,
    integrate_adaptive,
    integrate_jacobi_weighted,
    product,
    total,
)


def test_defaults():
    q = QuadratureSpec()
    assert (q.rel_tol, q.abs_tol, q.max_panels, q.tail_cut) == (1e-10, 1e-14, 4096, 1e-18)
    assert q.to_json()['fail_tol'] == 1e-6


@pytest.mark.parametrize("kwargs", [
    {'rel_tol': 0.0},
    {'abs_tol': -1.0},
    {'tail_cut': 0.0},
    {'max_panels': 8},
    {'max_panels': 100.0},
    {'rel_tol': 1e-20},
])
def test_invalid_spec(kwargs):
    with pytest.raises(ValueError):
        QuadratureSpec(**kwargs)


def test_tightened_and_panels():
    q = QuadratureSpec().tightened(10.0)
    assert q.rel_tol == pytest.approx(1e-11)
    assert QuadratureSpec().with_panels(64).max_panels == 64


def test_exponential_tail(quadrature):
    result = integrate_adaptive(lambda x: math.exp(-x), (0.0, np.inf), quadrature,
                                envelope=TailEnvelope(power=0.0))
    assert result.value == pytest.approx(1.0, rel=1e-12)
    assert result.cutoff is not None and result.cutoff > 40.0


def test_infinite_range_without_envelope(quadrature):
    result = integrate_adaptive(lambda x: 1.0 / (1.0 + x * x), (0.0, np.inf), quadrature)
    assert result.value == pytest.approx(math.pi / 2.0, rel=1e-10)
    assert result.cutoff is None


def test_semicircle(quadrature):
    result = integrate_adaptive(lambda x: math.sqrt(max(1.0 - x * x, 0.0)), (-1.0, 1.0), quadrature)
    assert result.value == pytest.approx(math.pi / 2.0, rel=1e-9)


def test_log_singularity_at_breakpoint(quadrature):
    # ∫₀^∞ x² e^{−x} ln x dx = Γ′(3)
    result = integrate_adaptive(lambda x: x * x * math.exp(-x) * math.log(x) if x > 0.0 else 0.0,
                                (0.0, np.inf), quadrature, breakpoints=(1.0,),
                                envelope=TailEnvelope(power=3.0))
    assert result.value == pytest.approx(2.0 * (1.5 - 0.5772156649015329), rel=1e-9)
    assert result.value == pytest.approx(1.845569, abs=1e-6)


def test_jacobi_weighted():
    # ∫(1+x)^{1/2}(1−x)^{1/2} dx = π/2
    result = integrate_jacobi_weighted(lambda x: 1.0, 0.5, 0.5, 0)
    assert result.value == pytest.approx(math.pi / 2.0, rel=1e-12)
    assert result.error == 0.0
    quartic = integrate_jacobi_weighted(lambda x: x ** 4 - x, 0.0, 0.0, 4)
    assert quartic.value == pytest.approx(0.4, rel=1e-13)
    with pytest.raises(DomainError):
        integrate_jacobi_weighted(lambda x: 1.0, -1.0, 0.0, 0)
    with pytest.raises(DomainError):
        integrate_jacobi_weighted(lambda x: 1.0, 0.5, 0.5, -1)


def test_jacobi_weighted_large_exponents():
    # mean of x = 2t − 1 with t ~ Beta(a + 1, b + 1) is (a − b)/(a + b + 2)
    a, b = 101.5, 84.5
    mass = math.exp((a + b + 1.0) * math.log(2.0) + betaln(a + 1.0, b + 1.0))
    assert integrate_jacobi_weighted(lambda x: 1.0, a, b, 0).value == pytest.approx(mass, rel=1e-12)
    mean = integrate_jacobi_weighted(lambda x: x, a, b, 1).value / mass
    assert mean == pytest.approx((a - b) / (a + b + 2.0), rel=1e-12)


def test_envelope_cutoff():
    cut = TailEnvelope(power=2.0, rate=1.0).cutoff(0.0, 1e-18)
    peak = 2.0 ** 2 * math.exp(-2.0)
    assert cut ** 2 * math.exp(-cut) == pytest.approx(1e-18 * peak, rel=1e-6)
    with pytest.raises(ValueError):
        TailEnvelope(power=1.0, rate=0.0)


def test_reversed_interval(quadrature):
    with pytest.raises(DomainError):
        integrate_adaptive(lambda x: x, (1.0, 0.0), quadrature)


def test_budget_exhausted_raises():
    q = QuadratureSpec(rel_tol=1e-12, max_panels=16, fail_tol=1e-12)
    with pytest.raises(QuadratureAccuracyError) as info:
        integrate_adaptive(lambda x: math.sin(1.0 / x) / x if x > 0.0 else 0.0, (0.0, 1.0), q)
    assert info.value.interval[1] == pytest.approx(1.0)
    assert math.isfinite(info.value.estimate)


def test_flagged_panel_within_gate_is_a_warning(quadrature, monkeypatch, caplog):
    def flagged_quad(f, lo, hi, **kwargs):
        return 2.0, 1e-15, {}, "roundoff error is detected"

    monkeypatch.setattr("hydrocomplex.quadrature.quad", flagged_quad)
    with caplog.at_level(logging.WARNING, logger="hydrocomplex.quadrature"):
        result = integrate_adaptive(lambda x: 2.0, (0.0, 1.0), quadrature)
    assert result.value == 2.0
    assert any(record.levelno == logging.WARNING and "Accepted flagged panel" in record.getMessage()
               for record in caplog.records)


def test_estimate_arithmetic():
    a, b = Estimate(2.0, 0.02), Estimate(3.0, 0.03)
    assert product([a, b]).value == pytest.approx(6.0)
    assert product([a, b]).error == pytest.approx(6.0 * 0.02)
    assert total([a, b]) == (5.0, pytest.approx(0.05), None)
    assert a.scaled(-2.0).error == pytest.approx(0.04)
