"""
Adaptive panel quadrature shared by the closed-form measures and the oracle.

Every integral is split at caller-supplied breakpoints (polynomial roots, where
log-type integrands have integrable singularities) and each panel is handed to
QUADPACK through scipy.integrate.quad. Semi-infinite ranges are either truncated
where a declared envelope x^power e^{-rate x} falls below the tail cut, or passed
to quad with an infinite upper limit when the decay is only algebraic.

Polynomials against a Jacobi weight on [-1, 1] skip the adaptive machinery and
get an exact Gauss-Jacobi rule.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq
from scipy.special import roots_jacobi

from .core import DomainError, QuadratureAccuracyError
from .specfun import log_beta

logger = logging.getLogger(__name__)

Integrand = Callable[[float], float]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budgets for every numerical integral.

    rel_tol drives QUADPACK on each panel; abs_tol is the absolute floor of the
    acceptance gate; fail_tol is the relative error estimate above which a flagged
    panel is rejected instead of logged.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_panels: int = 4096
    tail_cut: float = 1e-18
    fail_tol: float = 1e-6

    def __post_init__(self) -> None:
        for name in ('rel_tol', 'abs_tol', 'tail_cut', 'fail_tol'):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"QuadratureSpec.{name} must be positive, got {value}")
        if self.rel_tol < 5e-15:
            raise ValueError(f"QuadratureSpec.rel_tol below QUADPACK's floor: {self.rel_tol}")
        if not isinstance(self.max_panels, int) or self.max_panels < 16:
            raise ValueError(f"QuadratureSpec.max_panels must be an integer ≥ 16, got {self.max_panels}")

    def tightened(self, factor: float = 10.0) -> "QuadratureSpec":
        return replace(self, rel_tol=max(self.rel_tol / factor, 5e-15))

    def with_panels(self, max_panels: int) -> "QuadratureSpec":
        return replace(self, max_panels=max_panels)

    def to_json(self) -> dict:
        return {
            'rel_tol': self.rel_tol,
            'abs_tol': self.abs_tol,
            'max_panels': self.max_panels,
            'tail_cut': self.tail_cut,
            'fail_tol': self.fail_tol,
        }


class Estimate(NamedTuple):
    """A quadrature value with its error estimate; cutoff is set when a tail was truncated."""

    value: float
    error: float
    cutoff: Optional[float] = None

    def scaled(self, factor: float) -> "Estimate":
        return Estimate(self.value * factor, self.error * abs(factor), self.cutoff)


def product(estimates: Sequence[Estimate]) -> Estimate:
    """Product of independent estimates with first-order error propagation."""
    value = 1.0
    rel = 0.0
    for estimate in estimates:
        value *= estimate.value
        if estimate.value != 0.0:
            rel += estimate.error / abs(estimate.value)
    return Estimate(value, abs(value) * rel)


def total(estimates: Sequence[Estimate]) -> Estimate:
    return Estimate(sum(e.value for e in estimates), sum(e.error for e in estimates))


@dataclass(frozen=True)
class TailEnvelope:
    """Upper-envelope shape x^power e^{-rate x} of a semi-infinite integrand."""

    power: float
    rate: float = 1.0

    def __post_init__(self) -> None:
        if not self.rate > 0.0:
            raise ValueError(f"Tail envelope rate must be positive, got {self.rate}")

    def cutoff(self, start: float, tail_cut: float) -> float:
        """Smallest x beyond the envelope peak where it drops below tail_cut of the peak."""
        anchor = max(start, self.power / self.rate, 1.0)
        log_cut = np.log(tail_cut)

        def excess(x: float) -> float:
            return self.power * np.log(x / anchor) - self.rate * (x - anchor) - log_cut

        width = max(1.0, 1.0 / self.rate)
        hi = anchor + width
        while excess(hi) > 0.0:
            width *= 2.0
            hi = anchor + width
        return float(brentq(excess, anchor, hi, xtol=1e-12))


def _panel(f: Integrand, lo: float, hi: float, q: QuadratureSpec,
           weight: Optional[str] = None, wvar: Optional[Tuple[float, float]] = None) -> Estimate:
    if weight is None:
        result = quad(f, lo, hi, epsabs=0.0, epsrel=q.rel_tol, limit=q.max_panels, full_output=1)
    else:
        result = quad(f, lo, hi, epsabs=0.0, epsrel=q.rel_tol, limit=q.max_panels,
                      weight=weight, wvar=wvar, full_output=1)
    value, error = float(result[0]), float(result[1])
    if len(result) > 3:
        # QUADPACK raised a flag; accept if the error estimate still clears the gate
        if not np.isfinite(value) or error > max(q.abs_tol, q.fail_tol * abs(value)):
            raise QuadratureAccuracyError("Adaptive quadrature did not converge", value, error, (lo, hi))
        logger.warning("Accepted flagged panel [%g, %g]: %s (error %.3g)", lo, hi, result[3], error)
    return Estimate(value, error)


def integrate_adaptive(f: Integrand, interval: Tuple[float, float], q: QuadratureSpec,
                       breakpoints: Sequence[float] = (),
                       envelope: Optional[TailEnvelope] = None) -> Estimate:
    """
    Integrate f over interval, splitting at breakpoints.

    Args:
        f: Scalar integrand, finite except possibly at breakpoints
        interval: (a, b); b may be np.inf
        q: Tolerances and panel budget
        breakpoints: Interior points where f has integrable singularities or kinks
        envelope: Decay shape of f beyond the last breakpoint; when given, an
            infinite upper limit is truncated at the envelope's tail cut

    Returns:
        Estimate: (value, error) summed over panels; cutoff records a truncation

    Raises:
        QuadratureAccuracyError: If a panel misses the acceptance gate
    """
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise DomainError(f"Empty or reversed interval [{a}, {b}]")
    interior = sorted(float(x) for x in breakpoints if a < x < b)

    cutoff: Optional[float] = None
    if np.isinf(b) and envelope is not None:
        start = interior[-1] if interior else a
        cutoff = envelope.cutoff(start, q.tail_cut)
        logger.debug("Truncated [%g, inf) at %g (tail cut %g)", a, cutoff, q.tail_cut)
        b = cutoff

    edges = [a, *interior, b]
    value = 0.0
    error = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        panel = _panel(f, lo, hi, q)
        value += panel.value
        error += panel.error

    if abs(error) > max(q.abs_tol, q.fail_tol * abs(value)):
        raise QuadratureAccuracyError("Accumulated quadrature error above gate", value, error, (a, b))
    return Estimate(value, error, cutoff)


def integrate_jacobi_weighted(f: Integrand, a_exp: float, b_exp: float, degree: int) -> Estimate:
    """
    ∫_{-1}^{1} f(x)(1 + x)^a_exp (1 − x)^b_exp dx for a polynomial f of the given degree.

    A Gauss-Jacobi rule with degree // 2 + 1 nodes is exact here, whatever the size
    of the exponents. The weights are rescaled to the weight's total mass computed
    in log space, so the reported error is zero.
    """
    if not (a_exp > -1.0 and b_exp > -1.0):
        raise DomainError(f"Jacobi weight exponents must exceed -1, got ({a_exp}, {b_exp})")
    if int(degree) != degree or degree < 0:
        raise DomainError(f"Polynomial degree must be a non-negative integer, got {degree!r}")
    # roots_jacobi weights are (1 − x)^alpha (1 + x)^beta
    nodes, weights = roots_jacobi(int(degree) // 2 + 1, b_exp, a_exp)
    log_mass = (a_exp + b_exp + 1.0) * np.log(2.0) + log_beta(a_exp + 1.0, b_exp + 1.0)
    weights = weights / np.sum(weights)
    value = float(np.exp(log_mass) * np.dot(weights, [f(float(x)) for x in nodes]))
    if not np.isfinite(value):
        raise QuadratureAccuracyError("Gauss-Jacobi rule overflowed", value, float("inf"), (-1.0, 1.0))
    return Estimate(value, 0.0)
