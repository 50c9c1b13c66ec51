import numpy as np

from ..core import Space
from ..specfun import digamma, log_gamma
from .circular import CircularState, check_circular


class GroundState(CircularState):
    def __init__(self, D: int) -> None:
        """Ground state (n = 1, every μ_i = 0) of the D-dimensional hydrogenic system."""
        super().__init__(n=1, D=D)


def ground_state(D: int) -> GroundState:
    return GroundState(D)


def ground_state_lmc(D: int, space: "Space | str") -> float:
    """
    LMC complexity of the D-dimensional ground state.

    Position space gives (e/2)^D; the momentum value is a gamma/digamma
    expression with no quadrature.
    """
    check_circular(1, D)
    if Space.parse(space) is Space.POSITION:
        return float(np.exp(D * (1.0 - np.log(2.0))))
    log_value = (D * np.log(2.0) + log_gamma((D + 1) / 2.0) + log_gamma(2.0 + 1.5 * D)
                 - 0.5 * np.log(np.pi) - log_gamma(2.0 * D + 2.0)
                 + (D + 1) * (digamma(D + 1.0) - digamma((D + 2) / 2.0)))
    return float(np.exp(log_value))
