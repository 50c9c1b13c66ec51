"""
Real-argument gamma-family helpers.

Thin, domain-checked wrappers over scipy.special. Every gamma-heavy prefactor in
the package is assembled from these in log space and exponentiated once.
"""

from typing import Union

import numpy as np
from scipy import special

from .core import DomainError

RealLike = Union[float, np.ndarray]


def _positive(x: RealLike, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0.0)):
        raise DomainError(f"{name} requires x > 0, got {x!r}")
    return arr


def _unwrap(value: np.ndarray, like: RealLike) -> RealLike:
    return float(value) if np.ndim(like) == 0 else value


def log_gamma(x: RealLike) -> RealLike:
    """ln Γ(x) for x > 0."""
    arr = _positive(x, "log_gamma")
    return _unwrap(special.gammaln(arr), x)


def digamma(x: RealLike) -> RealLike:
    """ψ(x) = Γ′(x)/Γ(x) for x > 0."""
    arr = _positive(x, "digamma")
    return _unwrap(special.psi(arr), x)


def log_beta(a: float, b: float) -> float:
    """ln B(a, b)."""
    _positive(a, "log_beta")
    _positive(b, "log_beta")
    return float(special.betaln(a, b))
