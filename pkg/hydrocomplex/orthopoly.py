"""
Orthonormal Laguerre and Gegenbauer polynomials.

Both families are evaluated through the three-term recurrence of their Jacobi
matrix, which keeps values bounded for large degree and parameter. Roots come
from the symmetric tridiagonal eigenproblem (Golub-Welsch), polished with one
Newton step.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import xlogy

from .core import DomainError
from .specfun import log_gamma

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class LaguerreSpec:
    """L̃^alpha_degree, orthonormal on [0, ∞) with weight x^alpha e^{-x}."""

    degree: int
    alpha: float

    def __post_init__(self) -> None:
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 0:
            raise DomainError(f"Laguerre degree must be a non-negative integer, got {self.degree!r}")
        if not self.alpha > -1.0:
            raise DomainError(f"Laguerre parameter must exceed -1, got {self.alpha}")

    @property
    def family(self) -> str:
        return "laguerre"

    @property
    def support(self) -> Tuple[float, float]:
        return (0.0, np.inf)

    @property
    def log_mass(self) -> float:
        """ln ∫ω = ln Γ(alpha + 1)."""
        return float(log_gamma(self.alpha + 1.0))

    def diagonal(self, k: int) -> float:
        return 2.0 * k + self.alpha + 1.0

    def off_diagonal_sq(self, k: int) -> float:
        """β_k of the monic recurrence; β_0 is unused and returned as 0."""
        return k * (k + self.alpha) if k > 0 else 0.0

    def log_weight(self, x: ArrayLike) -> ArrayLike:
        return xlogy(self.alpha, x) - x

    def sign(self) -> float:
        """Orthonormal recurrence is monic-positive; the classical form leads with (−1)^degree."""
        return -1.0 if self.degree % 2 else 1.0

    def check_domain(self, x: np.ndarray) -> None:
        if np.any(x < 0.0):
            raise DomainError("Laguerre polynomials are evaluated on x ≥ 0")


@dataclass(frozen=True)
class GegenbauerSpec:
    """C̃^lam_degree, orthonormal on [-1, 1] with weight (1 − x²)^{lam − 1/2}."""

    degree: int
    lam: float

    def __post_init__(self) -> None:
        if not isinstance(self.degree, (int, np.integer)) or self.degree < 0:
            raise DomainError(f"Gegenbauer degree must be a non-negative integer, got {self.degree!r}")
        if not self.lam > 0.0:
            raise DomainError(f"Gegenbauer parameter must be positive, got {self.lam}")

    @property
    def family(self) -> str:
        return "gegenbauer"

    @property
    def support(self) -> Tuple[float, float]:
        return (-1.0, 1.0)

    @property
    def log_mass(self) -> float:
        """ln ∫ω = ln[√π Γ(lam + 1/2)/Γ(lam + 1)]."""
        return 0.5 * np.log(np.pi) + float(log_gamma(self.lam + 0.5)) - float(log_gamma(self.lam + 1.0))

    def diagonal(self, k: int) -> float:
        return 0.0

    def off_diagonal_sq(self, k: int) -> float:
        if k == 0:
            return 0.0
        lam = self.lam
        return k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0))

    def log_weight(self, x: ArrayLike) -> ArrayLike:
        return xlogy(self.lam - 0.5, 1.0 - np.square(x))

    def sign(self) -> float:
        return 1.0

    def check_domain(self, x: np.ndarray) -> None:
        if np.any(np.abs(x) > 1.0):
            raise DomainError("Gegenbauer polynomials are evaluated on |x| ≤ 1")


PolynomialSpec = Union[LaguerreSpec, GegenbauerSpec]


def _recurrence(spec: PolynomialSpec, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Value and derivative of the orthonormal polynomial by forward recurrence."""
    p_prev = np.zeros_like(x)
    p = np.full_like(x, np.exp(-0.5 * spec.log_mass))
    dp_prev = np.zeros_like(x)
    dp = np.zeros_like(x)
    for k in range(spec.degree):
        b_k = spec.diagonal(k)
        s_k = np.sqrt(spec.off_diagonal_sq(k))
        s_next = np.sqrt(spec.off_diagonal_sq(k + 1))
        p_next = ((x - b_k) * p - s_k * p_prev) / s_next
        dp_next = ((x - b_k) * dp + p - s_k * dp_prev) / s_next
        p_prev, p = p, p_next
        dp_prev, dp = dp, dp_next
    sign = spec.sign()
    return sign * p, sign * dp


def _as_array(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _unwrap(value: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(value) if np.ndim(like) == 0 else value


def evaluate(spec: PolynomialSpec, x: ArrayLike) -> ArrayLike:
    """
    Evaluate the orthonormal polynomial described by spec.

    Args:
        spec: Laguerre or Gegenbauer specification
        x: Point(s) inside the support

    Returns:
        Polynomial value(s), scalar if x is scalar

    Raises:
        DomainError: If any x lies outside the support
    """
    arr = _as_array(x)
    spec.check_domain(arr)
    value, _ = _recurrence(spec, arr)
    return _unwrap(value, x)


def evaluate_with_derivative(spec: PolynomialSpec, x: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
    """Value and first derivative, from the differentiated recurrence."""
    arr = _as_array(x)
    spec.check_domain(arr)
    value, derivative = _recurrence(spec, arr)
    return _unwrap(value, x), _unwrap(derivative, x)


def laguerre_orthonormal(k: int, alpha: float, x: ArrayLike) -> ArrayLike:
    return evaluate(LaguerreSpec(k, alpha), x)


def gegenbauer_orthonormal(k: int, lam: float, x: ArrayLike) -> ArrayLike:
    return evaluate(GegenbauerSpec(k, lam), x)


def roots_of(spec: PolynomialSpec) -> np.ndarray:
    """
    Zeros of the polynomial, ascending.

    The Jacobi matrix eigenvalues are refined by a single Newton step, which
    brings them to near machine precision for the degrees used here.
    """
    k = spec.degree
    if k == 0:
        return np.empty(0)
    diag = np.array([spec.diagonal(i) for i in range(k)], dtype=float)
    off = np.sqrt(np.array([spec.off_diagonal_sq(i) for i in range(1, k)], dtype=float))
    if k == 1:
        nodes = diag
    else:
        nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    value, derivative = _recurrence(spec, nodes)
    nodes = nodes - value / derivative
    lo, hi = spec.support
    return np.sort(np.clip(nodes, lo, hi))
