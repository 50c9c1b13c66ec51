"""
Brute-force evaluation of every measure straight from density values.

Nothing here touches the closed forms in measures: the only shared code is the
density evaluation in states and the quadrature engine. Each D-dimensional
integral is split into one radial integral and one integral per hyperangle,
using the product form of the hyperspherical harmonics.

Radial integrals run in a dimensionless variable t = r/λ₁ (position) or
t = ηp (momentum), with λ₁ the Z = 1 length scale, so every integrand is the
same for all Z. A physical radius (momentum) is t times the unit returned by
_length_unit, and each measure is rescaled by the matching power of that unit.
"""

import logging
from functools import lru_cache
from typing import Callable, List, Tuple, Union

import numpy as np
from scipy.special import entr

from .core import AngularFactorSpec, DomainError, HyperState, MeasureSet, Space, check_charge
from .quadrature import (
    Estimate,
    QuadratureSpec,
    TailEnvelope,
    integrate_adaptive,
    product,
    total,
)
from .states import (
    angular_amplitude,
    angular_density_factor,
    angular_nodes,
    momentum_nodes,
    momentum_radial_amplitude,
    momentum_radial_density,
    position_nodes,
    position_radial_amplitude,
    position_radial_density,
)

logger = logging.getLogger(__name__)

DEFAULT_QUADRATURE = QuadratureSpec()
LOG_2PI = float(np.log(2.0 * np.pi))

__all__ = [
    'QuadratureSpec',
    'integrate_adaptive',
    'oracle_disequilibrium',
    'oracle_entropic_moment',
    'oracle_entropy',
    'oracle_fisher',
    'oracle_measure_set',
    'oracle_moment',
    'oracle_normalization',
    'oracle_variance',
]


def _length_unit(state: HyperState, Z: float, space: Space) -> float:
    """Physical radius (or momentum) per unit of t."""
    if space is Space.POSITION:
        return state.eta / (2.0 * Z)
    return Z / state.eta


def _unit_density(state: HyperState, space: Space) -> Tuple[Callable[[float], float], np.ndarray]:
    """The Z = 1 radial density in t, scaled to unit mass against t^{D−1} dt, and its nodes in t."""
    unit = _length_unit(state, 1.0, space)
    jacobian = unit ** state.D
    if space is Space.POSITION:
        def density(t: float) -> float:
            return float(position_radial_density(state, 1.0, unit * t)) * jacobian

        return density, position_nodes(state, 1.0) / unit

    def density_p(t: float) -> float:
        return float(momentum_radial_density(state, 1.0, unit * t)) * jacobian

    return density_p, momentum_nodes(state, 1.0) / unit


def _unit_slope(state: HyperState, space: Space) -> Callable[[float], float]:
    """d/dt of the square root of the unit density."""
    unit = _length_unit(state, 1.0, space)
    factor = unit ** (state.D / 2.0 + 1.0)
    amplitude = position_radial_amplitude if space is Space.POSITION else momentum_radial_amplitude

    def slope(t: float) -> float:
        _, derivative = amplitude(state, 1.0, unit * t)
        return float(derivative) * factor

    return slope


def _radial(state: HyperState, space: Space, integrand: Callable[[float], float],
            q: QuadratureSpec, rate: float, power: float) -> Estimate:
    """∫₀^∞ integrand(t) dt; position integrands decay like t^power e^{−rate t}, momentum ones algebraically."""
    _, nodes = _unit_density(state, space)
    envelope = TailEnvelope(power=max(power, 0.0), rate=rate) if space is Space.POSITION else None
    return integrate_adaptive(integrand, (0.0, np.inf), q, tuple(nodes), envelope)


def _polynomial_power(state: HyperState) -> int:
    """Power of t that the squared radial amplitude carries at large t (position)."""
    return 2 * state.l + 2 * state.radial_degree


@lru_cache(maxsize=None)
def _angular_integral(spec: AngularFactorSpec, kind: str, exponent: float, q: QuadratureSpec) -> Estimate:
    """
    One-angle integral against (sin θ)^{2α_j} dθ.

    kind: 'power' (∫f^exponent), 'entropy' (∫−f ln f), 'inverse_sin2' (∫f/sin²θ)
    or 'gradient' (∫(dh/dθ)²).
    """
    weight_power = spec.measure_power

    def integrand(theta: float) -> float:
        sin = np.sin(theta)
        if kind == 'gradient':
            _, slope = angular_amplitude(spec, theta)
            return float(slope * slope * sin ** weight_power)
        value = float(angular_density_factor(spec, theta))
        if kind == 'power':
            return value ** exponent * sin ** weight_power
        if kind == 'entropy':
            return float(entr(value)) * sin ** weight_power
        if kind == 'inverse_sin2':
            return value * sin ** (weight_power - 2.0)
        raise ValueError(f"Unknown angular integral '{kind}'")

    return integrate_adaptive(integrand, (0.0, np.pi), q, tuple(angular_nodes(spec)))


def _angular_mass(state: HyperState, q: QuadratureSpec) -> Estimate:
    return product([_angular_integral(spec, 'power', 1.0, q) for spec in state.angular_factors])


# Moments


def _check_moment(state: HyperState, space: Space, k: float) -> None:
    if 2 * state.l + state.D + k <= 0:
        raise DomainError(f"⟨{space.value}^{k}⟩ diverges at the origin for {state.label}")
    if space is Space.MOMENTUM and k >= 2 * state.l + state.D + 2:
        raise DomainError(f"⟨p^{k}⟩ diverges at infinity for {state.label}")


@lru_cache(maxsize=None)
def _radial_moment(state: HyperState, space: Space, k: float, q: QuadratureSpec) -> Estimate:
    density, _ = _unit_density(state, space)
    power = state.D - 1 + k
    return _radial(state, space, lambda t: density(t) * t ** power, q,
                   rate=1.0, power=_polynomial_power(state) + power)


def _moment(state: HyperState, Z: float, space: Space, k: float, q: QuadratureSpec) -> Estimate:
    _check_moment(state, space, k)
    unit = product([_radial_moment(state, space, float(k), q), _angular_mass(state, q)])
    return unit.scaled(_length_unit(state, Z, space) ** k)


def oracle_moment(state: HyperState, Z: float, space: Union[Space, str], k: int,
                  q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    ⟨r^k⟩ (or ⟨p^k⟩) by direct quadrature of the factorized density.

    Raises:
        DomainError: If the moment diverges (k ≤ −(2l + D), or k ≥ 2l + D + 2 in momentum space)
    """
    Z = check_charge(Z)
    return _moment(state, Z, Space.parse(space), k, q).value


def oracle_normalization(state: HyperState, Z: float, space: Union[Space, str],
                         q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    Z = check_charge(Z)
    return _moment(state, Z, Space.parse(space), 0, q).value


def oracle_variance(state: HyperState, Z: float, space: Union[Space, str],
                    q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """⟨t²⟩ − ⟨t⟩² of the radial variable."""
    Z = check_charge(Z)
    space = Space.parse(space)
    first = _moment(state, Z, space, 1, q).value
    second = _moment(state, Z, space, 2, q).value
    return second - first * first


# Entropy and frequency moments


@lru_cache(maxsize=None)
def _unit_entropy(state: HyperState, space: Space, q: QuadratureSpec) -> Estimate:
    density, _ = _unit_density(state, space)
    power = state.D - 1
    radial = _radial(state, space, lambda t: float(entr(density(t))) * t ** power, q,
                     rate=1.0, power=_polynomial_power(state) + power + 1)
    angular = [_angular_integral(spec, 'entropy', 1.0, q) for spec in state.angular_factors]
    return total([radial, Estimate(LOG_2PI, 0.0), *angular])


def oracle_entropy(state: HyperState, Z: float, space: Union[Space, str],
                   q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """−∫ density · ln density, as radial entropy + ln 2π + one entropy per hyperangle."""
    Z = check_charge(Z)
    space = Space.parse(space)
    return _unit_entropy(state, space, q).value + state.D * np.log(_length_unit(state, Z, space))


@lru_cache(maxsize=None)
def _unit_power(state: HyperState, space: Space, exponent: float, q: QuadratureSpec) -> Estimate:
    """∫ (unit density)^exponent, radial × (2π)^{1−exponent} × angular."""
    density, _ = _unit_density(state, space)
    power = state.D - 1
    radial = _radial(state, space, lambda t: density(t) ** exponent * t ** power, q,
                     rate=exponent, power=exponent * _polynomial_power(state) + power)
    angular = [_angular_integral(spec, 'power', exponent, q) for spec in state.angular_factors]
    return product([radial, Estimate((2.0 * np.pi) ** (1.0 - exponent), 0.0), *angular])


def oracle_entropic_moment(state: HyperState, Z: float, space: Union[Space, str], alpha: float,
                           q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Frequency moment ⟨ρ^α⟩ = ∫ρ^{α+1}; alpha = 1 is the disequilibrium."""
    Z = check_charge(Z)
    if not alpha >= 0.0:
        raise DomainError(f"Frequency moments need alpha ≥ 0, got {alpha}")
    space = Space.parse(space)
    unit = _unit_power(state, space, float(alpha) + 1.0, q)
    return unit.value * _length_unit(state, Z, space) ** (-state.D * alpha)


def oracle_disequilibrium(state: HyperState, Z: float, space: Union[Space, str],
                          q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    return oracle_entropic_moment(state, Z, space, 1.0, q)


# Fisher information


@lru_cache(maxsize=None)
def _unit_fisher(state: HyperState, space: Space, q: QuadratureSpec) -> Estimate:
    slope = _unit_slope(state, space)
    power = state.D - 1
    radial = _radial(state, space, lambda t: slope(t) ** 2 * t ** power, q,
                     rate=1.0, power=_polynomial_power(state) + power)
    terms: List[Estimate] = [radial.scaled(4.0)]

    factors = state.angular_factors
    for j, spec in enumerate(factors):
        gradient = _angular_integral(spec, 'gradient', 1.0, q)
        if gradient.value == 0.0:
            continue
        outer = [_angular_integral(factors[i], 'inverse_sin2', 1.0, q) for i in range(j)]
        inner = [_angular_integral(factors[i], 'power', 1.0, q) for i in range(j + 1, len(factors))]
        inverse_square = _radial_moment(state, space, -2.0, q)
        terms.append(product([Estimate(4.0, 0.0), inverse_square, gradient, *outer, *inner]))
    return total(terms)


def oracle_fisher(state: HyperState, Z: float, space: Union[Space, str],
                  q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    F = 4∫|∇√density|², with analytic derivatives of every factor.

    The radial term integrates the squared radial slope; the hyperangle θ_j
    contributes 4⟨t⁻²⟩ ∏_{i<j}⟨sin⁻²θ_i⟩ ∫(dh_j/dθ_j)² dμ_j.
    """
    Z = check_charge(Z)
    space = Space.parse(space)
    return _unit_fisher(state, space, q).value / _length_unit(state, Z, space) ** 2


def oracle_measure_set(state: HyperState, Z: float, space: Union[Space, str],
                       q: QuadratureSpec = DEFAULT_QUADRATURE) -> MeasureSet:
    space = Space.parse(space)
    return MeasureSet(
        space=space,
        normalization=oracle_normalization(state, Z, space, q),
        disequilibrium=oracle_disequilibrium(state, Z, space, q),
        shannon=oracle_entropy(state, Z, space, q),
        fisher=oracle_fisher(state, Z, space, q),
        variance=oracle_variance(state, Z, space, q),
        provenance='oracle',
        variance_provenance='oracle',
    )
