import math

import pytest

from hydrocomplex import HyperState, QuadratureSpec, Space
from hydrocomplex.core import DomainError
from hydrocomplex.measures import (
    EntropicIntegralSpec,
    canonical_variance,
    disequilibrium,
    entropic_estimate,
    entropic_integral,
    fisher_information,
    measure_set,
    momentum_entropy_constant,
    momentum_moments_printed,
    normalization_estimate,
    position_moments,
    printed_disequilibrium,
    shannon_entropy,
    variance,
)
from hydrocomplex.orthopoly import GegenbauerSpec, LaguerreSpec

GS_MOMENTUM_VARIANCE = 1.0 - 64.0 / (9.0 * math.pi ** 2)


def test_entropic_integrals_of_constants():
    assert entropic_integral(EntropicIntegralSpec(GegenbauerSpec(0, 1.0))) == pytest.approx(
        math.log(math.pi / 2.0), rel=1e-9)
    assert entropic_integral(EntropicIntegralSpec(LaguerreSpec(0, 1.0), i=1)) == pytest.approx(0.0, abs=1e-13)
    assert entropic_integral(EntropicIntegralSpec(LaguerreSpec(0, 2.0), i=1)) == pytest.approx(
        3.0 * math.log(2.0), rel=1e-10)


def test_entropic_integral_with_roots_is_finite():
    value = entropic_integral(EntropicIntegralSpec(LaguerreSpec(3, 2.0), i=1))
    assert math.isfinite(value)
    assert math.isfinite(entropic_integral(EntropicIntegralSpec(GegenbauerSpec(4, 1.5))))


@pytest.mark.parametrize("spec", [
    EntropicIntegralSpec(LaguerreSpec(3, 2.0), i=1),
    EntropicIntegralSpec(LaguerreSpec(5, 6.0), i=1),
    EntropicIntegralSpec(GegenbauerSpec(4, 1.5)),
    EntropicIntegralSpec(GegenbauerSpec(6, 3.0)),
])
def test_entropic_integral_is_stable_under_panel_budget(spec):
    q = QuadratureSpec()
    base = entropic_estimate(spec, q)
    doubled = entropic_estimate(spec, q.with_panels(2 * q.max_panels))
    assert abs(doubled.value - base.value) <= base.error + q.abs_tol
    tight = entropic_estimate(spec, q.tightened())
    assert abs(tight.value - base.value) <= base.error + tight.error + q.abs_tol


def test_entropic_spec_checks():
    with pytest.raises(DomainError):
        EntropicIntegralSpec(LaguerreSpec(1, 0.0), i=2)
    with pytest.raises(DomainError):
        EntropicIntegralSpec(GegenbauerSpec(1, 1.0), i=1)


def test_ground_state_golden_set(gs3):
    assert disequilibrium(gs3, 1.0, 'position') == pytest.approx(1.0 / (8.0 * math.pi), rel=1e-9)
    assert disequilibrium(gs3, 1.0, 'momentum') == pytest.approx(33.0 / (16.0 * math.pi ** 2), rel=1e-9)
    assert shannon_entropy(gs3, 1.0, 'position') == pytest.approx(3.0 + math.log(math.pi), rel=1e-9)
    assert shannon_entropy(gs3, 1.0, 'momentum') == pytest.approx(2.42186, abs=1e-4)
    assert fisher_information(gs3, 1.0, 'position') == pytest.approx(4.0)
    assert fisher_information(gs3, 1.0, 'momentum') == pytest.approx(12.0)
    assert variance(gs3, 1.0, 'position').value == pytest.approx(0.75)
    assert position_moments(gs3, 1.0) == (pytest.approx(1.5), pytest.approx(3.0))
    assert momentum_moments_printed(gs3, 1.0) == (pytest.approx(2.0 / math.pi), pytest.approx(1.0))


def test_p_state_fisher(p_state):
    assert fisher_information(p_state, 1.0, Space.POSITION) == pytest.approx(0.5)


def test_charge_dependence(p_state):
    D = p_state.D
    assert disequilibrium(p_state, 2.5, 'position') == pytest.approx(
        2.5 ** D * disequilibrium(p_state, 1.0, 'position'), rel=1e-12)
    assert disequilibrium(p_state, 2.5, 'momentum') == pytest.approx(
        2.5 ** -D * disequilibrium(p_state, 1.0, 'momentum'), rel=1e-12)
    assert shannon_entropy(p_state, 2.5, 'position') == pytest.approx(
        shannon_entropy(p_state, 1.0, 'position') - D * math.log(2.5), rel=1e-12)
    assert fisher_information(p_state, 2.5, 'momentum') == pytest.approx(
        fisher_information(p_state, 1.0, 'momentum') / 6.25, rel=1e-12)


def test_variance_records(gs3):
    assert not variance(gs3, 1.0, 'position').needs_oracle
    printed = variance(gs3, 1.0, 'momentum')
    assert printed.needs_oracle
    assert printed.value == pytest.approx(1.0 - 4.0 / math.pi ** 2)


def test_canonical_momentum_variance_comes_from_oracle(gs3):
    value, source = canonical_variance(gs3, 1.0, 'momentum')
    assert source == 'oracle'
    assert value == pytest.approx(GS_MOMENTUM_VARIANCE, rel=1e-8)
    assert canonical_variance(gs3, 1.0, 'position') == (pytest.approx(0.75), 'closed-form')


def test_printed_disequilibrium(gs3):
    assert math.isnan(printed_disequilibrium(gs3, 1.0, 'position'))
    assert printed_disequilibrium(gs3, 1.0, 'momentum') == pytest.approx(
        disequilibrium(gs3, 1.0, 'momentum'), rel=1e-8)


def test_printed_position_functional_converges_for_high_l():
    state = HyperState(D=3, n=3, mu=(2, 0))
    assert math.isfinite(printed_disequilibrium(state, 1.0, 'position'))


def test_two_dimensional_ground_state_ratio_limit(gs2):
    assert math.isfinite(momentum_entropy_constant(gs2))


@pytest.mark.parametrize("mu", [(0, 0, 0), (1, 0, 0), (2, 2, 2)])
def test_normalization(mu):
    state = HyperState(D=4, n=3, mu=mu)
    for space in Space:
        assert normalization_estimate(state, space).value == pytest.approx(1.0, rel=1e-9)


def test_measure_set(gs3):
    measures = measure_set(gs3, 1.0, 'momentum')
    assert measures.space is Space.MOMENTUM
    assert measures.variance_provenance == 'oracle'
    assert measures.variance == pytest.approx(GS_MOMENTUM_VARIANCE, rel=1e-8)
    assert measures.normalization == pytest.approx(1.0, rel=1e-9)
    payload = measures.to_json()
    assert set(payload) >= {'normalization', 'disequilibrium', 'shannon', 'fisher', 'variance'}
    assert payload['errors']['shannon'] >= 0.0
