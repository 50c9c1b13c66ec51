"""
Position and momentum densities of D-dimensional hydrogenic orbitals.

Densities are exposed factorized: a radial part and one polar factor per
hyperangle, with full density = radial × (1/2π) × ∏ factors. Radial parts are
evaluated in the dimensionless variables x = r/λ (position) and u = ηp/Z
(momentum); all prefactors are assembled in log space.

Amplitudes (square roots of the density factors) and their analytic derivatives
are exposed as well, for gradient functionals.
"""

from typing import Sequence, Tuple, Union

import numpy as np
from scipy.special import xlogy

from .core import AngularFactorSpec, DomainError, HyperState, check_charge
from .orthopoly import GegenbauerSpec, LaguerreSpec, evaluate, evaluate_with_derivative, roots_of

ArrayLike = Union[float, np.ndarray]


def radial_laguerre(state: HyperState) -> LaguerreSpec:
    """L̃^{2L+1}_{η−L−1} of the position radial factor."""
    return LaguerreSpec(state.radial_degree, 2.0 * state.L + 1.0)


def momentum_gegenbauer(state: HyperState) -> GegenbauerSpec:
    """C̃^{L+1}_{η−L−1} of the momentum radial factor."""
    return GegenbauerSpec(state.radial_degree, state.L + 1.0)


def angular_gegenbauer(spec: AngularFactorSpec) -> GegenbauerSpec:
    return GegenbauerSpec(spec.degree, spec.parameter)


def _nonnegative(value: ArrayLike, name: str) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError(f"{name} must be non-negative")
    return arr


def _angle(theta: ArrayLike) -> np.ndarray:
    arr = np.asarray(theta, dtype=float)
    if np.any((arr < 0.0) | (arr > np.pi)):
        raise DomainError("Polar angles must lie in [0, π]")
    return arr


def _unwrap(value: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(value) if np.ndim(like) == 0 else value


# Position space


def _log_position_prefactor(state: HyperState, Z: float) -> float:
    """ln[λ^{-D}/(2η)]."""
    length_scale = state.eta / (2.0 * Z)
    return -state.D * np.log(length_scale) - np.log(2.0 * state.eta)


def position_radial_density(state: HyperState, Z: float, r: ArrayLike) -> ArrayLike:
    """
    Radial factor R(r) of the position density; full ρ = R·|Y|².

    With x = r/λ the factor is (λ^{-D}/2η)·x^{2l}·e^{-x}·[L̃^{2L+1}_{η−L−1}(x)]²,
    i.e. ω_{2L+1}(x)·x^{-(D-2)} with the powers of x combined, so it stays finite
    at the origin for every D.
    """
    Z = check_charge(Z)
    arr = _nonnegative(r, "Radius")
    x = arr * (2.0 * Z / state.eta)
    p = evaluate(radial_laguerre(state), x)
    log_value = _log_position_prefactor(state, Z) + xlogy(2 * state.l, x) - x
    return _unwrap(np.exp(log_value) * np.square(p), r)


def position_radial_amplitude(state: HyperState, Z: float, r: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """g(r) with g² = R(r), and dg/dr."""
    Z = check_charge(Z)
    arr = _nonnegative(r, "Radius")
    scale = 2.0 * Z / state.eta
    x = arr * scale
    l = state.l
    p, dp = evaluate_with_derivative(radial_laguerre(state), x)
    half_log = 0.5 * _log_position_prefactor(state, Z) - 0.5 * x
    amplitude = np.exp(half_log + xlogy(l, x)) * p
    slope = np.exp(half_log + xlogy(l, x)) * (dp - 0.5 * p)
    if l > 0:
        slope = slope + l * np.exp(half_log + xlogy(l - 1, x)) * p
    return _unwrap(amplitude, r), _unwrap(slope * scale, r)


def position_nodes(state: HyperState, Z: float) -> np.ndarray:
    """Radii of the radial nodes, ascending."""
    Z = check_charge(Z)
    return roots_of(radial_laguerre(state)) * (state.eta / (2.0 * Z))


# Momentum space


def _momentum_variables(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(y, 1 + y, 1 − y) for y = (1 − u²)/(1 + u²), free of cancellation at both ends."""
    with np.errstate(divide='ignore', over='ignore'):
        u2 = np.square(u)
        one_plus = 2.0 / (1.0 + u2)
        one_minus = 2.0 / (1.0 + 1.0 / u2)
    return one_plus - 1.0, one_plus, one_minus


def momentum_radial_density(state: HyperState, Z: float, p: ArrayLike) -> ArrayLike:
    """
    Radial factor G(p) of the momentum density; full γ = G·|Y|².

    Evaluated in the combined form (η/Z)^D (1+y)^{L+(D+5)/2} (1−y)^l [C̃^{L+1}_{η−L−1}(y)]²
    with y = (1 − u²)/(1 + u²), u = ηp/Z, which is finite at p = 0.
    """
    Z = check_charge(Z)
    arr = _nonnegative(p, "Momentum")
    u = arr * (state.eta / Z)
    y, one_plus, one_minus = _momentum_variables(u)
    c = evaluate(momentum_gegenbauer(state), y)
    with np.errstate(divide='ignore'):
        log_value = (state.D * np.log(state.eta / Z)
                     + (state.L + (state.D + 5) / 2.0) * np.log(one_plus)
                     + xlogy(state.l, one_minus))
    return _unwrap(np.exp(log_value) * np.square(c), p)


def momentum_radial_amplitude(state: HyperState, Z: float, p: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """g(p) with g² = G(p), and dg/dp, from the u-form (η/Z)^{D/2} 2^{L+2} u^l (1+u²)^{-(L+2)} C̃(y)."""
    Z = check_charge(Z)
    arr = _nonnegative(p, "Momentum")
    scale = state.eta / Z
    u = arr * scale
    l, L = state.l, state.L
    y, _, _ = _momentum_variables(u)
    c, dc = evaluate_with_derivative(momentum_gegenbauer(state), y)
    log_base = 0.5 * state.D * np.log(scale) + (L + 2.0) * np.log(2.0)
    log1p_u2 = np.log1p(np.square(u))
    amplitude = np.exp(log_base + xlogy(l, u) - (L + 2.0) * log1p_u2) * c
    slope = (-2.0 * (L + 2.0) * np.exp(log_base + xlogy(l + 1, u) - (L + 3.0) * log1p_u2) * c
             - 4.0 * np.exp(log_base + xlogy(l + 1, u) - (L + 4.0) * log1p_u2) * dc)
    if l > 0:
        slope = slope + l * np.exp(log_base + xlogy(l - 1, u) - (L + 2.0) * log1p_u2) * c
    return _unwrap(amplitude, p), _unwrap(slope * scale, p)


def momentum_nodes(state: HyperState, Z: float) -> np.ndarray:
    """Momenta of the radial nodes, ascending."""
    Z = check_charge(Z)
    y = roots_of(momentum_gegenbauer(state))
    u = np.sqrt((1.0 - y) / (1.0 + y))
    return np.sort(u * (Z / state.eta))


# Hyperangles


def angular_density_factor(spec: AngularFactorSpec, theta: ArrayLike) -> ArrayLike:
    """[C̃^{α_j+μ_{j+1}}_{μ_j−μ_{j+1}}(cos θ)]²·(sin θ)^{2μ_{j+1}}; unit mass against (sin θ)^{2α_j} dθ."""
    arr = _angle(theta)
    c = evaluate(angular_gegenbauer(spec), np.clip(np.cos(arr), -1.0, 1.0))
    value = np.square(c) * np.power(np.sin(arr), 2 * spec.mu_j1)
    return _unwrap(value, theta)


def angular_amplitude(spec: AngularFactorSpec, theta: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """h(θ) = C̃(cos θ)(sin θ)^{μ_{j+1}} and dh/dθ."""
    arr = _angle(theta)
    cos, sin = np.clip(np.cos(arr), -1.0, 1.0), np.sin(arr)
    mu = spec.mu_j1
    c, dc = evaluate_with_derivative(angular_gegenbauer(spec), cos)
    amplitude = c * np.power(sin, mu)
    slope = -dc * np.power(sin, mu + 1)
    if mu > 0:
        slope = slope + mu * c * np.power(sin, mu - 1) * cos
    return _unwrap(amplitude, theta), _unwrap(slope, theta)


def angular_nodes(spec: AngularFactorSpec) -> np.ndarray:
    """Polar angles of the nodal cones of one factor, ascending in θ."""
    return np.sort(np.arccos(roots_of(angular_gegenbauer(spec))))


def harmonic_density(state: HyperState, angles: Sequence[float]) -> float:
    """|Y|² at (θ_1, ..., θ_{D−2}[, φ]); φ never enters."""
    factors = state.angular_factors
    if len(angles) not in (len(factors), len(factors) + 1):
        raise DomainError(f"Expected {len(factors)} polar angles (plus optional φ), got {len(angles)}")
    value = 1.0 / (2.0 * np.pi)
    for spec, theta in zip(factors, angles):
        value *= float(angular_density_factor(spec, theta))
    return value


def position_density(state: HyperState, Z: float, r: float, angles: Sequence[float]) -> float:
    return float(position_radial_density(state, Z, r)) * harmonic_density(state, angles)


def momentum_density(state: HyperState, Z: float, p: float, angles: Sequence[float]) -> float:
    return float(momentum_radial_density(state, Z, p)) * harmonic_density(state, angles)
