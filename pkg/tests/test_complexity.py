import math

import pytest

from hydrocomplex import HyperState, Space, circular_lmc, circular_state, ground_state
from hydrocomplex.complexity import (
    bound_report,
    complexity_triple,
    compute_state,
    cramer_rao,
    cramer_rao_printed,
    entropy_power,
    fisher_shannon,
    lmc,
    shannon_decomposition,
)
from hydrocomplex.measures import shannon_entropy

CHARGES = (1.0, 2.5, 37.0)


def test_ground_state_lmc(gs3, gs2):
    assert lmc(gs3, 1.0, 'position') == pytest.approx((math.e / 2.0) ** 3, rel=1e-12)
    assert lmc(gs2, 1.0, 'position') == pytest.approx(1.847264, abs=1e-6)


@pytest.mark.parametrize("D", range(2, 11))
def test_ground_state_lmc_pipeline(D):
    assert lmc(ground_state(D), 1.0, Space.POSITION) == pytest.approx((math.e / 2.0) ** D, rel=1e-6)


@pytest.mark.parametrize("n, D", [(n, D) for D in (2, 3, 5, 15) for n in range(1, 6)])
def test_circular_closed_form_matches_pipeline(n, D):
    state = circular_state(n, D)
    for space in Space:
        assert lmc(state, 1.0, space) == pytest.approx(circular_lmc(n, D, space), rel=1e-8), space


@pytest.mark.parametrize("n, D", [(30, 5), (40, 5), (30, 15), (40, 15)])
def test_large_circular_states(n, D):
    state = circular_state(n, D)
    for space in Space:
        value = lmc(state, 1.0, space)
        assert math.isfinite(value)
        assert value == pytest.approx(circular_lmc(n, D, space), rel=1e-8), space


def test_fisher_shannon_ground_state(gs3):
    assert fisher_shannon(gs3, 1.0, 'position') == pytest.approx(2.0 * math.e * math.pi ** (-1.0 / 3.0), rel=1e-8)


def test_cramer_rao_ground_state(gs3):
    assert cramer_rao(gs3, 1.0, 'position') == pytest.approx(3.0)
    assert cramer_rao(gs3, 1.0, 'momentum', pairing='printed') == pytest.approx(12.0 * (1.0 - 4.0 / math.pi ** 2))
    assert cramer_rao(gs3, 1.0, 'momentum') == pytest.approx(12.0 * (1.0 - 64.0 / (9.0 * math.pi ** 2)), rel=1e-8)
    with pytest.raises(ValueError):
        cramer_rao(gs3, 1.0, 'momentum', pairing='mixed')


def test_cramer_rao_printed(gs3):
    assert cramer_rao_printed(gs3, 'position') == pytest.approx(3.0)
    assert cramer_rao_printed(gs3, 'momentum') == pytest.approx(8.0 * (1.0 - 4.0 / math.pi ** 2))


def test_bound_report_ground_state(gs3):
    triple = complexity_triple(gs3, 1.0, 'position')
    report = triple.bound_report
    assert report.lmc.satisfied and report.lmc.asserted
    assert report.fisher_shannon.satisfied
    assert not report.cramer_rao.satisfied
    assert not report.cramer_rao.asserted
    assert report.cramer_rao.margin == pytest.approx(-6.0)
    assert bound_report(triple, 3) == report


def test_shannon_decomposition(p_state):
    decomposition = shannon_decomposition(p_state, 'momentum')
    assert decomposition.t_value == pytest.approx(shannon_entropy(p_state, 1.0, 'momentum'))
    assert decomposition.entropy(4.0) == pytest.approx(shannon_entropy(p_state, 4.0, 'momentum'), rel=1e-12)
    assert entropy_power(p_state, 1.0, 'position') == pytest.approx(
        math.exp(shannon_entropy(p_state, 1.0, 'position')))


def test_lmc_and_fisher_shannon_are_charge_free(battery):
    for state in battery:
        for space in Space:
            reference = (lmc(state, 1.0, space), fisher_shannon(state, 1.0, space))
            for Z in CHARGES[1:]:
                assert lmc(state, Z, space) == pytest.approx(reference[0], rel=1e-10)
                assert fisher_shannon(state, Z, space) == pytest.approx(reference[1], rel=1e-10)


def test_triples_are_charge_free(battery):
    for state in battery:
        for space in Space:
            reference = complexity_triple(state, CHARGES[0], space)
            for Z in CHARGES[1:]:
                triple = complexity_triple(state, Z, space)
                assert triple.lmc == pytest.approx(reference.lmc, rel=1e-10)
                assert triple.fisher_shannon == pytest.approx(reference.fisher_shannon, rel=1e-10)
                assert triple.cramer_rao == pytest.approx(reference.cramer_rao, rel=1e-10)


def test_lower_bounds(battery):
    for state in battery:
        for space in Space:
            assert lmc(state, 1.0, space) >= 1.0 - 1e-9
            assert fisher_shannon(state, 1.0, space) >= state.D - 1e-9


def test_compute_state_json(gs3):
    report = compute_state(gs3, 2.0, ('position', 'momentum'))
    payload = report.to_json()
    assert set(payload) == {'state', 'params', 'measures', 'complexities', 'bounds'}
    assert set(payload['params']) == {'eta', 'L', 'lambda', 'energy'}
    assert set(payload['complexities']) == {'position', 'momentum'}
    assert payload['complexities']['position']['lmc'] == pytest.approx((math.e / 2.0) ** 3, rel=1e-12)
    assert payload['bounds']['position']['cramer_rao']['satisfied'] is False
    assert payload['params']['energy'] == pytest.approx(-4.0)


def test_intermediate_chain_state():
    state = HyperState(D=4, n=3, mu=(1, 0, 0))
    triple = complexity_triple(state, 1.0, 'position')
    assert triple.space is Space.POSITION
    assert triple.lmc >= 1.0
