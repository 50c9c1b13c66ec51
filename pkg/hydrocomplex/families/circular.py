"""
Circular states: μ_i = n − 1 for every i.

Closed forms for the densities, disequilibria, Shannon entropies and LMC
complexities of this family. Everything is assembled in log space, since
(2n+D−3)^D and Γ(4n+2D−2) overflow doubles long before the states get exotic.
"""

from typing import Sequence

import numpy as np
from scipy.special import xlogy

from ..core import DomainError, HyperState, Space, StateError, Violation, check_charge
from ..specfun import digamma, log_gamma

LOG_PI = float(np.log(np.pi))
LOG_2 = float(np.log(2.0))


class CircularState(HyperState):
    def __init__(self, n: int, D: int) -> None:
        """
        Circular orbital of principal number n in D dimensions.

        The whole chain sits at its maximum, so the radial polynomials are
        constants and every angular factor reduces to a power of sin θ_j.
        """
        check_circular(n, D)
        super().__init__(D=D, n=n, mu=(n - 1,) * (D - 1))


def circular_state(n: int, D: int) -> CircularState:
    return CircularState(n, D)


def check_circular(n: int, D: int) -> None:
    """Circular chains are admissible for every n ≥ 1, so only n and D can be wrong."""
    violation = None
    if not isinstance(n, int) or not isinstance(D, int) or isinstance(n, bool) or isinstance(D, bool):
        violation = Violation('not_integer', f"Circular states need integer n and D, got n={n!r}, D={D!r}")
    elif D < 2:
        violation = Violation('dimension', f"D ≥ 2 violated (D={D})")
    elif n < 1:
        violation = Violation('principal', f"n ≥ 1 violated (n={n})")
    if violation is not None:
        raise StateError(violation)


def _log_angular_power(n: int, D: int, angles: Sequence[float]) -> float:
    """ln ∏_j (sin θ_j)^{2n−2}; a trailing φ is ignored."""
    theta = np.asarray(list(angles), dtype=float)
    if theta.size not in (D - 2, D - 1):
        raise DomainError(f"Expected {D - 2} polar angles (plus optional φ), got {theta.size}")
    theta = theta[:D - 2]
    if np.any((theta < 0.0) | (theta > np.pi)):
        raise DomainError("Polar angles must lie in [0, π]")
    return float(np.sum(xlogy(2 * n - 2, np.sin(theta))))


def circular_position_density(n: int, D: int, Z: float, r: float, angles: Sequence[float]) -> float:
    """ρ_cs = C·e^{−r/λ}(r/λ)^{2n−2}∏(sin θ_j)^{2n−2}."""
    check_circular(n, D)
    Z = check_charge(Z)
    if r < 0.0:
        raise DomainError("Radius must be non-negative")
    x = 4.0 * Z * r / (2 * n + D - 3)
    log_c = ((D + 2 - 2 * n) * LOG_2 + D * np.log(Z) - 0.5 * (D - 1) * LOG_PI
             - D * np.log(2 * n + D - 3) - log_gamma(n) - log_gamma(n + (D - 1) / 2.0))
    return float(np.exp(log_c - x + xlogy(2 * n - 2, x) + _log_angular_power(n, D, angles)))


def circular_momentum_density(n: int, D: int, Z: float, p: float, angles: Sequence[float]) -> float:
    """γ_cs = C·(ηp/Z)^{2n−2}(1 + η²p²/Z²)^{−(2n+D−1)}∏(sin θ_j)^{2n−2}."""
    check_circular(n, D)
    Z = check_charge(Z)
    if p < 0.0:
        raise DomainError("Momentum must be non-negative")
    u = (n + (D - 3) / 2.0) * p / Z
    log_c = ((2 * n - 2) * LOG_2 + D * np.log(2 * n + D - 3) + log_gamma(n + (D - 1) / 2.0)
             - D * np.log(Z) - 0.5 * (D + 1) * LOG_PI - log_gamma(n))
    log_value = log_c + xlogy(2 * n - 2, u) - (2 * n + D - 1) * np.log1p(u * u)
    return float(np.exp(log_value + _log_angular_power(n, D, angles)))


def _log_position_disequilibrium(n: int, D: int) -> float:
    return (log_gamma(n - 0.5) + log_gamma(2 * n + (D - 3) / 2.0) - (2 * n - 2) * LOG_2
            - 0.5 * D * LOG_PI - D * np.log(2 * n + D - 3) - log_gamma(n)
            - 2.0 * log_gamma(n + (D - 1) / 2.0))


def _log_momentum_disequilibrium(n: int, D: int) -> float:
    return ((4 * n + D - 4) * LOG_2 + D * np.log(2 * n + D - 3)
            + 2.0 * log_gamma(n + (D - 1) / 2.0) + log_gamma(2 * n - 1) + log_gamma(2 * n + 1.5 * D)
            - 0.5 * (D + 2) * LOG_PI - 2.0 * log_gamma(n) - log_gamma(4 * n + 2 * D - 2))


def circular_disequilibrium(n: int, D: int, Z: float, space: "Space | str") -> float:
    """D[ρ_cs] ∝ Z^D and D[γ_cs] ∝ Z^{−D}."""
    check_circular(n, D)
    Z = check_charge(Z)
    if Space.parse(space) is Space.POSITION:
        return float(np.exp(_log_position_disequilibrium(n, D) + D * np.log(Z)))
    return float(np.exp(_log_momentum_disequilibrium(n, D) - D * np.log(Z)))


def circular_entropy_constant(n: int, D: int) -> float:
    """A(n, D) of the circular momentum entropy."""
    check_circular(n, D)
    return ((2 * n + D - 1) / (2 * n + D - 3) - (D + 1) / (2 * n + D - 2)
            - (n - 1) * digamma(n) - 0.5 * (D + 1) * digamma(n + (D - 2) / 2.0)
            + (n + (D - 1) / 2.0) * digamma(n + (D - 3) / 2.0))


def _position_entropy_exponent(n: int, D: int) -> float:
    return 2 * n + D - 2 - (n - 1) * (digamma(n) + digamma(n + (D - 1) / 2.0))


def circular_shannon(n: int, D: int, Z: float, space: "Space | str") -> float:
    """S[ρ_cs] and S[γ_cs]; the ∓D ln Z term carries the whole Z dependence."""
    check_circular(n, D)
    Z = check_charge(Z)
    log_scale = D * np.log(2 * n + D - 3)
    if Space.parse(space) is Space.POSITION:
        return float(_position_entropy_exponent(n, D) - D * LOG_2 + log_scale
                     + 0.5 * (D - 1) * LOG_PI + log_gamma(n) + log_gamma(n + (D - 1) / 2.0)
                     - D * np.log(Z))
    return float(circular_entropy_constant(n, D) + (D + 1) * LOG_2 + D * np.log(Z)
                 + 0.5 * (D + 1) * LOG_PI + log_gamma(n) - log_scale - log_gamma(n + (D - 1) / 2.0))


def circular_lmc(n: int, D: int, space: "Space | str") -> float:
    """C_LMC of a circular state, from gamma and digamma values only."""
    check_circular(n, D)
    if Space.parse(space) is Space.POSITION:
        log_value = (log_gamma(n - 0.5) + log_gamma(2 * n + (D - 3) / 2.0)
                     - (2 * n + D - 2) * LOG_2 - 0.5 * LOG_PI - log_gamma(n + (D - 1) / 2.0)
                     + _position_entropy_exponent(n, D))
    else:
        log_value = ((4 * n + 2 * D - 3) * LOG_2 + log_gamma(n + (D - 1) / 2.0)
                     + log_gamma(2 * n - 1) + log_gamma(2 * n + 1.5 * D) - 0.5 * LOG_PI
                     - log_gamma(n) - log_gamma(4 * n + 2 * D - 2) + circular_entropy_constant(n, D))
    return float(np.exp(log_value))
