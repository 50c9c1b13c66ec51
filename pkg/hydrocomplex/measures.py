"""
Single-density information measures from closed and semi-closed expressions.

Shannon entropies are assembled from gamma/digamma coefficients plus entropic
integrals of the orthonormal polynomials; disequilibria from a radial quartic
integral times one quartic Gegenbauer integral per hyperangle; Fisher information
and the position variance are fully closed. Everything that does not depend on Z
is computed once per (state, tolerances) and memoized.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union

import numpy as np
from scipy.special import entr, xlogy

from .core import AngularFactorSpec, DomainError, HyperState, MeasureSet, Space, check_charge
from .orthopoly import GegenbauerSpec, LaguerreSpec, PolynomialSpec, evaluate, roots_of
from .quadrature import (
    Estimate,
    QuadratureSpec,
    TailEnvelope,
    integrate_adaptive,
    integrate_jacobi_weighted,
    product,
    total,
)
from .specfun import digamma, log_beta, log_gamma
from .states import angular_gegenbauer, momentum_gegenbauer, radial_laguerre

logger = logging.getLogger(__name__)

DEFAULT_QUADRATURE = QuadratureSpec()
LOG_2 = float(np.log(2.0))
LOG_2PI = float(np.log(2.0 * np.pi))


@dataclass(frozen=True)
class EntropicIntegralSpec:
    """E_i[p] = −∫ x^i ω(x) p(x)² ln p(x)² dx over the support of p."""

    spec: PolynomialSpec
    i: int = 0

    def __post_init__(self) -> None:
        if self.i not in (0, 1):
            raise DomainError(f"Entropic integrals use the moment weight x^0 or x^1, got i={self.i}")
        if self.i == 1 and self.spec.family != "laguerre":
            raise DomainError("The x^1 moment weight pairs with Laguerre polynomials only")

    @property
    def family(self) -> str:
        return self.spec.family


@dataclass(frozen=True)
class Variance:
    """A variance value and whether the canonical number must come from the oracle.

    Position variances are exact closed forms. The momentum value is the printed
    (Z²/η²)(1 − 4/π²), kept for reporting only.
    """

    value: float
    needs_oracle: bool


# Entropic integrals


def _polynomial_integrand(spec: PolynomialSpec, power: int):
    def integrand(x: float) -> float:
        p = evaluate(spec, x)
        with np.errstate(divide='ignore'):
            weight = np.exp(xlogy(power, x) + spec.log_weight(x))
        return float(weight * entr(p * p))
    return integrand


@lru_cache(maxsize=None)
def _entropic(spec: PolynomialSpec, i: int, q: QuadratureSpec) -> Estimate:
    if spec.degree == 0:
        # p₀² is the inverse weight mass, so E_i = ⟨x^i⟩ ln(mass)
        if isinstance(spec, LaguerreSpec):
            mean = spec.alpha + 1.0 if i == 1 else 1.0
            return Estimate(mean * float(log_gamma(spec.alpha + 1.0)), 0.0)
        return Estimate(2.0 * spec.lam * LOG_2 + log_beta(spec.lam + 0.5, spec.lam + 0.5), 0.0)
    nodes = tuple(roots_of(spec))
    envelope = None
    if isinstance(spec, LaguerreSpec):
        envelope = TailEnvelope(power=spec.alpha + i + 2 * spec.degree + 1.0)
    return integrate_adaptive(_polynomial_integrand(spec, i), spec.support, q, nodes, envelope)


def entropic_estimate(spec: EntropicIntegralSpec, q: QuadratureSpec = DEFAULT_QUADRATURE) -> Estimate:
    return _entropic(spec.spec, spec.i, q)


def entropic_integral(spec: EntropicIntegralSpec, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Shannon entropic integral of an orthonormal polynomial.

    The range is split at every root of the polynomial, where ln p² has an
    integrable singularity; the Laguerre tail is truncated at q.tail_cut.

    Args:
        spec: Polynomial and moment weight
        q: Quadrature tolerances

    Returns:
        float: E_i[p]

    Raises:
        QuadratureAccuracyError: If a panel misses the acceptance gate
    """
    return entropic_estimate(spec, q).value


# Coefficients of the entropy formulas


def position_entropy_constant(state: HyperState) -> float:
    """A(n, l, D), with the logarithmic term read as a single −ln[2^{D−1}/η^{D+1}]."""
    eta, L, l, D = state.eta, state.L, state.l, state.D
    value = (3.0 * eta * eta - L * (L + 1.0)) / eta - ((D - 1) * LOG_2 - (D + 1) * np.log(eta))
    if l:
        value -= 2.0 * l * ((2.0 * eta - 2.0 * L - 1.0) / (2.0 * eta) + digamma(eta + L + 1.0))
    return float(value)


def harmonic_entropy_constant(state: HyperState) -> float:
    """B(l, {μ}, D); ln 2π alone for D = 2."""
    value = LOG_2PI
    for spec in state.angular_factors:
        a_mu = spec.alpha_j + spec.mu_j
        value -= 2.0 * spec.mu_j1 * (digamma(2.0 * spec.alpha_j + spec.mu_j + spec.mu_j1)
                                     - digamma(a_mu) - LOG_2 - 1.0 / (2.0 * a_mu))
    return float(value)


def momentum_entropy_constant(state: HyperState) -> float:
    """
    F(n, l, D).

    The ratio (2L+1)/(2η−1) equals (2l+D−2)/(2n+D−4); both vanish only for the
    two-dimensional ground state, where its continuous value 1 is used.
    """
    eta, L, D = state.eta, state.L, state.D
    denominator = 2.0 * eta - 1.0
    ratio = 1.0 if denominator == 0.0 else (2.0 * L + 1.0) / denominator
    log_ratio = D * np.log(eta) - (2.0 * L + 4.0) * LOG_2
    return float(-log_ratio
                 - (2.0 * L + 4.0) * (digamma(eta + L + 1.0) - digamma(eta))
                 + (L + 2.0) / eta
                 - (D + 1) * (1.0 - 2.0 * eta * ratio / (2.0 * eta + 1.0)))


def _angular_entropy(state: HyperState, q: QuadratureSpec) -> Estimate:
    return total([_entropic(angular_gegenbauer(spec), 0, q) for spec in state.angular_factors])


def shannon_estimate(state: HyperState, Z: float, space: Union[Space, str],
                     q: QuadratureSpec = DEFAULT_QUADRATURE) -> Estimate:
    Z = check_charge(Z)
    space = Space.parse(space)
    angular = _angular_entropy(state, q)
    if space is Space.POSITION:
        radial = _entropic(radial_laguerre(state), 1, q)
        value = (position_entropy_constant(state) + radial.value / (2.0 * state.eta)
                 - state.D * np.log(Z))
        error = radial.error / (2.0 * state.eta)
    else:
        radial = _entropic(momentum_gegenbauer(state), 0, q)
        value = momentum_entropy_constant(state) + radial.value + state.D * np.log(Z)
        error = radial.error
    value += harmonic_entropy_constant(state) + angular.value
    return Estimate(float(value), error + angular.error)


def shannon_entropy(state: HyperState, Z: float, space: Union[Space, str],
                    q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """S[ρ] or S[γ] in nats."""
    return shannon_estimate(state, Z, space, q).value


# Disequilibrium


@lru_cache(maxsize=None)
def _position_quartic(spec: LaguerreSpec, l: int, D: int, q: QuadratureSpec,
                      power: Optional[float] = None) -> Estimate:
    """∫ x^power e^{−2x} L̃⁴ dx; power defaults to 4l + D − 1."""
    power = 4 * l + D - 1 if power is None else power
    if spec.degree == 0:
        # L̃₀² = 1/Γ(alpha + 1)
        return Estimate(float(np.exp(log_gamma(power + 1.0) - (power + 1.0) * LOG_2
                                     - 2.0 * log_gamma(spec.alpha + 1.0))), 0.0)

    def integrand(x: float) -> float:
        p = evaluate(spec, x)
        with np.errstate(divide='ignore'):
            return float(np.exp(xlogy(power, x) - 2.0 * x) * p ** 4)

    envelope = TailEnvelope(power=power + 4.0 * spec.degree, rate=2.0)
    return integrate_adaptive(integrand, (0.0, np.inf), q, tuple(roots_of(spec)), envelope)


@lru_cache(maxsize=None)
def _momentum_quartic(spec: GegenbauerSpec, L: float, l: int, D: int) -> Estimate:
    """∫ (1+y)^{2L+(D+8)/2} (1−y)^{L+l+1/2} C̃⁴ dy."""
    return integrate_jacobi_weighted(lambda y: float(evaluate(spec, y)) ** 4,
                                     2.0 * L + (D + 8) / 2.0, L + l + 0.5, 4 * spec.degree)


@lru_cache(maxsize=None)
def _angular_quartic(spec: AngularFactorSpec) -> Estimate:
    """∫ f_j² (sin θ)^{2α_j} dθ as a Jacobi-weighted integral in cos θ."""
    gegenbauer = angular_gegenbauer(spec)
    exponent = gegenbauer.lam - 0.5 + spec.mu_j1
    return integrate_jacobi_weighted(lambda x: float(evaluate(gegenbauer, x)) ** 4, exponent, exponent,
                                     4 * gegenbauer.degree)


def harmonic_disequilibrium(state: HyperState, q: QuadratureSpec = DEFAULT_QUADRATURE) -> Estimate:
    """∫|Y|⁴ dΩ = (1/2π)∏_j ∫ f_j² dμ_j."""
    return product([Estimate(1.0 / (2.0 * np.pi), 0.0),
                    *(_angular_quartic(spec) for spec in state.angular_factors)])


def _radial_disequilibrium(state: HyperState, space: Space, q: QuadratureSpec) -> Estimate:
    """Z = 1 radial factor of the disequilibrium."""
    eta, D = state.eta, state.D
    if space is Space.POSITION:
        quartic = _position_quartic(radial_laguerre(state), state.l, D, q)
        return quartic.scaled(np.exp((D - 2) * LOG_2 - (D + 2) * np.log(eta)))
    quartic = _momentum_quartic(momentum_gegenbauer(state), state.L, state.l, D)
    return quartic.scaled(eta ** D)


def disequilibrium_estimate(state: HyperState, Z: float, space: Union[Space, str],
                            q: QuadratureSpec = DEFAULT_QUADRATURE) -> Estimate:
    Z = check_charge(Z)
    space = Space.parse(space)
    unit = product([_radial_disequilibrium(state, space, q), harmonic_disequilibrium(state, q)])
    exponent = state.D if space is Space.POSITION else -state.D
    return unit.scaled(Z ** exponent)


def disequilibrium(state: HyperState, Z: float, space: Union[Space, str],
                   q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    ⟨ρ⟩ = ∫ρ² (or ⟨γ⟩) as radial quartic integral × angular quartic integrals.

    The radial factor comes straight from the squared radial density, so the
    position integrand is x^{4l+D−1} e^{−2x} L̃⁴.
    """
    return disequilibrium_estimate(state, Z, space, q).value


def printed_disequilibrium(state: HyperState, Z: float, space: Union[Space, str],
                           q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    Disequilibrium through the functionals exactly as printed.

    The position functional carries x^{−D−5}{ω_{2L+1} L̃²}², whose integrand
    behaves as x^{4l+D−9} at the origin; NaN is returned when that diverges.
    The momentum functional 2^{4L+8}(η/Z)^D ∫ y^{4l+D−1}(1+y²)^{−(4L+8)} C̃⁴ dy is
    integrated in its own variable.
    """
    Z = check_charge(Z)
    space = Space.parse(space)
    eta, D, L, l = state.eta, state.D, state.L, state.l
    angular = harmonic_disequilibrium(state, q).value
    if space is Space.POSITION:
        power = 4 * l + D - 9
        if power <= -1:
            logger.info("Printed position functional diverges for %s (x^%d at 0)", state.label, power)
            return float('nan')
        quartic = _position_quartic(radial_laguerre(state), l, D, q, float(power))
        return float(np.exp((D - 2) * LOG_2 + D * np.log(Z) - (D + 2) * np.log(eta)) * quartic.value * angular)

    spec = momentum_gegenbauer(state)

    def integrand(u: float) -> float:
        u2 = u * u
        c = float(evaluate(spec, min(max((1.0 - u2) / (1.0 + u2), -1.0), 1.0)))
        with np.errstate(divide='ignore', over='ignore'):
            return float(np.exp(xlogy(4 * l + D - 1, u) - (4.0 * L + 8.0) * np.log1p(u2)) * c ** 4)

    roots = roots_of(spec)
    nodes = np.sqrt((1.0 - roots) / (1.0 + roots))
    quartic = integrate_adaptive(integrand, (0.0, np.inf), q, tuple(nodes))
    return float(np.exp((4.0 * L + 8.0) * LOG_2 + D * np.log(eta / Z)) * quartic.value * angular)


# Normalization


def normalization_estimate(state: HyperState, space: Union[Space, str],
                           q: QuadratureSpec = DEFAULT_QUADRATURE) -> Estimate:
    """Mass of the factorized density, from the weighted squares of its polynomials."""
    space = Space.parse(space)
    if space is Space.POSITION:
        spec = radial_laguerre(state)

        def radial_integrand(x: float) -> float:
            p = evaluate(spec, x)
            return float(np.exp(xlogy(spec.alpha + 1.0, x) - x) * p * p)

        radial = integrate_adaptive(radial_integrand, (0.0, np.inf), q, tuple(roots_of(spec)),
                                    TailEnvelope(power=spec.alpha + 1.0 + 2 * spec.degree))
        radial = radial.scaled(1.0 / (2.0 * state.eta))
    else:
        spec_g = momentum_gegenbauer(state)
        radial = integrate_jacobi_weighted(lambda y: float(evaluate(spec_g, y)) ** 2,
                                           spec_g.lam + 0.5, spec_g.lam - 0.5, 2 * spec_g.degree)
    angular = []
    for factor in state.angular_factors:
        gegenbauer = angular_gegenbauer(factor)
        exponent = gegenbauer.lam - 0.5
        angular.append(integrate_jacobi_weighted(
            lambda x, g=gegenbauer: float(evaluate(g, x)) ** 2, exponent, exponent, 2 * gegenbauer.degree))
    return product([radial, *angular])


# Fisher information, variances and moments


def fisher_information(state: HyperState, Z: float, space: Union[Space, str]) -> float:
    """F[ρ] = 4Z²(η − |m|)/η³ and F[γ] = (2η²/Z²)[5η² − 3L(L+1) − |m|(8η − 6L − 3) + 1]."""
    Z = check_charge(Z)
    eta, L, m = state.eta, state.L, state.m
    if Space.parse(space) is Space.POSITION:
        return 4.0 * Z * Z * (eta - m) / eta ** 3
    return 2.0 * eta * eta / (Z * Z) * (5.0 * eta * eta - 3.0 * L * (L + 1.0)
                                         - m * (8.0 * eta - 6.0 * L - 3.0) + 1.0)


def position_moments(state: HyperState, Z: float) -> Tuple[float, float]:
    """(⟨r⟩, ⟨r²⟩)."""
    Z = check_charge(Z)
    eta, L = state.eta, state.L
    first = (3.0 * eta * eta - L * (L + 1.0)) / (2.0 * Z)
    second = eta * eta * (5.0 * eta * eta + 1.0 - 3.0 * L * (L + 1.0)) / (2.0 * Z * Z)
    return first, second


def momentum_moments_printed(state: HyperState, Z: float) -> Tuple[float, float]:
    """(⟨p⟩, ⟨p²⟩) as printed: 2Z/(πη) and Z²/η². Only the second survives the oracle."""
    Z = check_charge(Z)
    return 2.0 * Z / (np.pi * state.eta), Z * Z / (state.eta * state.eta)


def variance(state: HyperState, Z: float, space: Union[Space, str]) -> Variance:
    Z = check_charge(Z)
    eta, L = state.eta, state.L
    if Space.parse(space) is Space.POSITION:
        value = (eta * eta * (eta * eta + 2.0) - L * L * (L + 1.0) ** 2) / (4.0 * Z * Z)
        return Variance(value=value, needs_oracle=False)
    return Variance(value=(Z * Z) / (eta * eta) * (1.0 - 4.0 / np.pi ** 2), needs_oracle=True)


def canonical_variance(state: HyperState, Z: float, space: Union[Space, str],
                       q: QuadratureSpec = DEFAULT_QUADRATURE) -> Tuple[float, str]:
    """The variance every complexity uses, with where it came from."""
    record = variance(state, Z, space)
    if not record.needs_oracle:
        return record.value, 'closed-form'
    from .oracle import oracle_variance

    return oracle_variance(state, Z, space, q), 'oracle'


def measure_set(state: HyperState, Z: float, space: Union[Space, str],
                q: QuadratureSpec = DEFAULT_QUADRATURE) -> MeasureSet:
    """All five measures of one density, closed-form wherever a closed form is trusted."""
    space = Space.parse(space)
    norm = normalization_estimate(state, space, q)
    diseq = disequilibrium_estimate(state, Z, space, q)
    shannon = shannon_estimate(state, Z, space, q)
    spread, source = canonical_variance(state, Z, space, q)
    return MeasureSet(
        space=space,
        normalization=norm.value,
        disequilibrium=diseq.value,
        shannon=shannon.value,
        fisher=fisher_information(state, Z, space),
        variance=spread,
        variance_provenance=source,
        errors={'normalization': norm.error, 'disequilibrium': diseq.error, 'shannon': shannon.error},
    )
