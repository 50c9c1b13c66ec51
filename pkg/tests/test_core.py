import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hydrocomplex import DerivedParams, DomainError, HyperState, Space, StateError, derived_params, validate_state
from hydrocomplex.core import check_charge


def test_validate_state():
    state = validate_state(3, 2, [1, 0])
    assert state == HyperState(D=3, n=2, mu=(1, 0))
    assert (state.l, state.m, state.eta, state.L, state.radial_degree) == (1, 0, 2.0, 1.0, 0)
    assert not state.is_circular
    assert validate_state(3, 2, (1, 1)).is_circular


def test_list_chain_is_stored_as_tuple():
    state = HyperState(D=4, n=3, mu=[2, 1, 1])
    assert state.mu == (2, 1, 1)
    assert hash(state) == hash(HyperState(D=4, n=3, mu=(2, 1, 1)))


@pytest.mark.parametrize("D, n, mu, code, index, fragment", [
    (1, 1, (), 'dimension', None, "D ≥ 2 violated"),
    (3, 0, (0, 0), 'principal', None, "n ≥ 1 violated"),
    (3, 2, (2, 0), 'l_bound', 1, "l ≤ n−1 violated"),
    (4, 3, (1, 2, 0), 'chain', 2, "mu_1 ≥ mu_2 violated"),
    (3, 2, (0,), 'mu_length', None, "D−1 = 2"),
    (3, 2, (1, -1), 'negative', 2, "mu_2 ≥ 0"),
    (3, 2, (1.0, 0), 'not_integer', 1, "integer"),
    (3.0, 2, (1, 0), 'not_integer', None, "integer"),
])
def test_violations(D, n, mu, code, index, fragment):
    with pytest.raises(StateError) as info:
        validate_state(D, n, mu)
    violation = info.value.violation
    assert violation.code == code
    assert violation.index == index
    assert fragment in str(info.value)
    assert violation.to_json()['code'] == code


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=1, max_value=8), st.data())
def test_descending_chains_validate(D, n, data):
    mu = sorted(data.draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=D - 1, max_size=D - 1)),
                reverse=True)
    state = validate_state(D, n, mu)
    assert len(state.angular_factors) == D - 2
    assert state.n - 1 >= state.l >= state.m >= 0


@given(st.integers(min_value=3, max_value=8), st.integers(min_value=2, max_value=8), st.data())
def test_ascending_step_is_rejected(D, n, data):
    low = data.draw(st.integers(min_value=0, max_value=n - 2))
    mu = [low] * (D - 1)
    mu[-1] = low + 1
    with pytest.raises(StateError) as info:
        validate_state(D, n, mu)
    assert info.value.violation.code == 'chain'


def test_angular_factors():
    factors = HyperState(D=5, n=4, mu=(3, 2, 2, 1)).angular_factors
    assert [f.j for f in factors] == [1, 2, 3]
    assert [f.alpha_j for f in factors] == [1.5, 1.0, 0.5]
    assert [f.degree for f in factors] == [1, 0, 1]
    assert [f.parameter for f in factors] == [3.5, 3.0, 1.5]
    assert [f.measure_power for f in factors] == [3.0, 2.0, 1.0]


def test_derived_params():
    params = derived_params(validate_state(3, 1, (0, 0)), 1.0)
    assert params == DerivedParams(eta=1.0, L=0.0, length_scale=0.5, energy=-1.0)
    params = derived_params(validate_state(5, 2, (1, 0, 0, 0)), 3.0)
    assert params.eta == pytest.approx(3.0)
    assert params.L == pytest.approx(2.0)
    assert params.length_scale == pytest.approx(0.5)
    assert params.energy == pytest.approx(-1.0)
    assert set(params.to_json()) == {'eta', 'L', 'lambda', 'energy'}


def test_two_dimensional_params():
    params = derived_params(validate_state(2, 1, (0,)), 1.0)
    assert params.eta == 0.5
    assert params.L == -0.5
    assert params.energy == pytest.approx(-4.0)


def test_charge_checks():
    assert check_charge(2) == 2.0
    for bad in (0.0, -1.0, math.nan):
        with pytest.raises(DomainError):
            check_charge(bad)


def test_space_parse():
    assert Space.parse("Momentum") is Space.MOMENTUM
    assert Space.parse(Space.POSITION) is Space.POSITION
    with pytest.raises(ValueError):
        Space.parse("phase")


def test_state_json():
    assert validate_state(3, 2, (1, 1)).to_json() == {'D': 3, 'n': 2, 'mu': [1, 1], 'l': 1, 'm': 1}
    assert validate_state(3, 2, (1, 1)).label == "D=3 n=2 mu=(1,1)"
