import pytest

from hydrocomplex import HyperState, QuadratureSpec, ground_state
from hydrocomplex.families import state_battery


@pytest.fixture
def quadrature():
    return QuadratureSpec()


@pytest.fixture
def gs3():
    return ground_state(3)


@pytest.fixture
def gs2():
    return ground_state(2)


@pytest.fixture
def p_state():
    """D = 3, n = 2, l = |m| = 1."""
    return HyperState(D=3, n=2, mu=(1, 1))


@pytest.fixture
def battery():
    return state_battery()

