from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Tuple


class Space(str, Enum):
    """Conjugate space a density lives in."""

    POSITION = "position"
    MOMENTUM = "momentum"

    @classmethod
    def parse(cls, value: "str | Space") -> "Space":
        if isinstance(value, Space):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown space '{value}' (expected 'position' or 'momentum')") from None


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class Violation:
    """Structured description of a hyperquantum-number constraint violation."""

    code: str
    message: str
    index: Optional[int] = None

    def to_json(self) -> Dict[str, Any]:
        return {'code': self.code, 'message': self.message, 'index': self.index}


class StateError(ValueError):
    """Raised when (D, n, mu) does not label a bound hydrogenic orbital."""

    def __init__(self, violation: Violation) -> None:
        super().__init__(violation.message)
        self.violation: Violation = violation


class QuadratureAccuracyError(ArithmeticError):
    """An adaptive integral missed its acceptance gate; carries the partial result."""

    def __init__(self, message: str, estimate: float, error: float,
                 interval: Tuple[float, float]) -> None:
        super().__init__(f"{message} (estimate={estimate:.15g}, error={error:.3g}, "
                         f"interval=[{interval[0]:.6g}, {interval[1]:.6g}])")
        self.estimate: float = estimate
        self.error: float = error
        self.interval: Tuple[float, float] = interval


def _violations(D: Any, n: Any, mu: Sequence[Any]) -> Optional[Violation]:
    if not isinstance(D, int) or isinstance(D, bool):
        return Violation('not_integer', f"D must be an integer, got {D!r}")
    if D < 2:
        return Violation('dimension', f"D ≥ 2 violated (D={D})")
    if not isinstance(n, int) or isinstance(n, bool):
        return Violation('not_integer', f"n must be an integer, got {n!r}")
    if n < 1:
        return Violation('principal', f"n ≥ 1 violated (n={n})")
    if len(mu) != D - 1:
        return Violation('mu_length', f"mu must have D−1 = {D - 1} entries, got {len(mu)}")
    for i, value in enumerate(mu, start=1):
        if not isinstance(value, int) or isinstance(value, bool):
            return Violation('not_integer', f"mu_{i} must be an integer, got {value!r}", i)
        if value < 0:
            return Violation('negative', f"mu_{i} ≥ 0 violated (mu_{i}={value})", i)
    if mu[0] > n - 1:
        return Violation('l_bound', f"l ≤ n−1 violated (l={mu[0]}, n={n})", 1)
    for i in range(1, len(mu)):
        if mu[i] > mu[i - 1]:
            return Violation('chain', f"mu_{i} ≥ mu_{i + 1} violated "
                                      f"(mu_{i}={mu[i - 1]}, mu_{i + 1}={mu[i]})", i + 1)
    return None


@dataclass(frozen=True)
class AngularFactorSpec:
    """The j-th polar factor of a hyperspherical harmonic.

    The factor is C̃^{alpha_j + mu_j1}_{mu_j − mu_j1}(cos θ_j) · (sin θ_j)^{mu_j1},
    normalized against the measure (sin θ_j)^{2 alpha_j} dθ_j.
    """

    j: int
    alpha_j: float
    mu_j: int
    mu_j1: int

    def __post_init__(self) -> None:
        if self.mu_j < self.mu_j1:
            raise DomainError(f"Angular factor degree mu_j − mu_j1 must be ≥ 0 (j={self.j})")
        if self.parameter < 0.5:
            raise DomainError(f"Angular Gegenbauer parameter must be ≥ 1/2 (j={self.j})")

    @property
    def degree(self) -> int:
        return self.mu_j - self.mu_j1

    @property
    def parameter(self) -> float:
        return self.alpha_j + self.mu_j1

    @property
    def measure_power(self) -> float:
        """Exponent of sin θ_j in the hyperspherical volume element (D − 1 − j)."""
        return 2.0 * self.alpha_j


@dataclass(frozen=True)
class HyperState:
    """A D-dimensional hydrogenic orbital labelled by (n, mu_1, ..., mu_{D−1}).

    mu_1 is the orbital number l and mu_{D−1} the magnetic number |m|. Construction
    validates the whole chain n − 1 ≥ mu_1 ≥ ... ≥ mu_{D−1} ≥ 0.
    """

    D: int
    n: int
    mu: Tuple[int, ...]

    def __post_init__(self) -> None:
        # lists and other sequences are stored as tuples so states stay hashable
        object.__setattr__(self, 'mu', tuple(self.mu))
        violation = _violations(self.D, self.n, self.mu)
        if violation is not None:
            raise StateError(violation)

    @property
    def l(self) -> int:
        return self.mu[0]

    @property
    def m(self) -> int:
        """|m|; the azimuthal sign never enters a density."""
        return self.mu[-1]

    @property
    def eta(self) -> float:
        return self.n + (self.D - 3) / 2.0

    @property
    def L(self) -> float:
        return self.l + (self.D - 3) / 2.0

    @property
    def radial_degree(self) -> int:
        """Degree η − L − 1 = n − l − 1 of the radial polynomial."""
        return self.n - self.l - 1

    @property
    def is_circular(self) -> bool:
        return all(value == self.n - 1 for value in self.mu)

    @property
    def angular_factors(self) -> Tuple[AngularFactorSpec, ...]:
        return tuple(
            AngularFactorSpec(j=j, alpha_j=(self.D - j - 1) / 2.0,
                              mu_j=self.mu[j - 1], mu_j1=self.mu[j])
            for j in range(1, self.D - 1)
        )

    @property
    def label(self) -> str:
        return f"D={self.D} n={self.n} mu=({','.join(str(v) for v in self.mu)})"

    def to_json(self) -> Dict[str, Any]:
        return {'D': self.D, 'n': self.n, 'mu': list(self.mu), 'l': self.l, 'm': self.m}


@dataclass(frozen=True)
class DerivedParams:
    """Grand quantum number, grand angular number, length scale and energy."""

    eta: float
    L: float
    length_scale: float  # λ = η/(2Z), atomic units
    energy: float        # E_η = −Z²/η², atomic units

    def to_json(self) -> Dict[str, Any]:
        return {
            'eta': self.eta,
            'L': self.L,
            'lambda': self.length_scale,
            'energy': self.energy,
        }


@dataclass(frozen=True)
class MeasureSet:
    """The five single-component measures of one density, and where they came from."""

    space: Space
    normalization: float
    disequilibrium: float
    shannon: float
    fisher: float
    variance: float
    provenance: str = 'closed-form'
    variance_provenance: str = 'closed-form'
    errors: Dict[str, float] = field(default_factory=dict, compare=False)

    def to_json(self) -> Dict[str, Any]:
        return {
            'normalization': self.normalization,
            'disequilibrium': self.disequilibrium,
            'shannon': self.shannon,
            'fisher': self.fisher,
            'variance': self.variance,
            'provenance': self.provenance,
            'variance_provenance': self.variance_provenance,
            'errors': dict(self.errors),
        }


def check_charge(Z: float) -> float:
    """Validate a nuclear charge (atomic units) and return it as float."""
    Z = float(Z)
    if not Z > 0.0:
        raise DomainError(f"Nuclear charge must be positive, got {Z}")
    return Z


def validate_state(D: int, n: int, mu: Sequence[int]) -> HyperState:
    """
    Validate hyperquantum numbers and build the state.

    Args:
        D: Dimension (≥ 2)
        n: Principal quantum number (≥ 1)
        mu: The chain (mu_1, ..., mu_{D−1}) with mu_1 = l and mu_{D−1} = |m|

    Returns:
        HyperState: The validated state

    Raises:
        StateError: With a Violation naming the broken constraint (and index)
    """
    return HyperState(D=D, n=n, mu=tuple(mu))


def derived_params(state: HyperState, Z: float) -> DerivedParams:
    """η = n + (D−3)/2, L = l + (D−3)/2, λ = η/(2Z), E = −Z²/η²."""
    Z = check_charge(Z)
    eta = state.eta
    return DerivedParams(eta=eta, L=state.L, length_scale=eta / (2.0 * Z),
                         energy=-Z * Z / (eta * eta))
