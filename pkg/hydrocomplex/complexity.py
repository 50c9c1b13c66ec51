"""
Two-component complexities: LMC, Fisher-Shannon and Cramér-Rao.

Each is assembled from Z = 1 ingredients (the entropy aggregate T, the unit-charge
disequilibrium, Fisher information and variance), so the nuclear charge cancels
structurally instead of numerically.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple, Union

import numpy as np

from .core import DerivedParams, HyperState, MeasureSet, Space, check_charge, derived_params
from .families import circular_lmc, ground_state_lmc
from .measures import (
    DEFAULT_QUADRATURE,
    canonical_variance,
    disequilibrium,
    fisher_information,
    measure_set,
    shannon_entropy,
    variance,
)
from .quadrature import QuadratureSpec

logger = logging.getLogger(__name__)

__all__ = [
    'Bound',
    'BoundReport',
    'ComplexityTriple',
    'ShannonDecomposition',
    'StateReport',
    'bound_report',
    'circular_lmc',
    'complexity_triple',
    'compute_state',
    'cramer_rao',
    'cramer_rao_printed',
    'entropy_power',
    'fisher_shannon',
    'ground_state_lmc',
    'lmc',
    'shannon_decomposition',
]


@dataclass(frozen=True)
class ShannonDecomposition:
    """T[ρ] or T[γ]: the Shannon entropy with its ∓D ln Z term removed."""

    t_value: float
    space: Space
    D: int

    def entropy(self, Z: float) -> float:
        Z = check_charge(Z)
        sign = -1.0 if self.space is Space.POSITION else 1.0
        return self.t_value + sign * self.D * np.log(Z)


@dataclass(frozen=True)
class Bound:
    value: float
    bound: float
    satisfied: bool
    asserted: bool

    @property
    def margin(self) -> float:
        return self.value - self.bound

    def to_json(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'bound': self.bound,
            'satisfied': self.satisfied,
            'margin': self.margin,
            'asserted': self.asserted,
        }


@dataclass(frozen=True)
class BoundReport:
    """C_LMC ≥ 1, C_FS ≥ D and C_CR ≥ D²; only the first two are treated as binding."""

    lmc: Bound
    fisher_shannon: Bound
    cramer_rao: Bound

    def to_json(self) -> Dict[str, Any]:
        return {
            'lmc': self.lmc.to_json(),
            'fisher_shannon': self.fisher_shannon.to_json(),
            'cramer_rao': self.cramer_rao.to_json(),
        }


@dataclass(frozen=True)
class ComplexityTriple:
    lmc: float
    fisher_shannon: float
    cramer_rao: float
    space: Space
    bound_report: BoundReport

    def to_json(self) -> Dict[str, Any]:
        return {
            'lmc': self.lmc,
            'fisher_shannon': self.fisher_shannon,
            'cramer_rao': self.cramer_rao,
        }


def shannon_decomposition(state: HyperState, space: Union[Space, str],
                          q: QuadratureSpec = DEFAULT_QUADRATURE) -> ShannonDecomposition:
    """T is the entropy at Z = 1."""
    space = Space.parse(space)
    return ShannonDecomposition(t_value=shannon_entropy(state, 1.0, space, q), space=space, D=state.D)


def entropy_power(state: HyperState, Z: float, space: Union[Space, str],
                  q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """exp(S)."""
    return float(np.exp(shannon_decomposition(state, space, q).entropy(Z)))


def lmc(state: HyperState, Z: float, space: Union[Space, str],
        q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """
    LMC shape complexity D·exp(S).

    Args:
        state: Hydrogenic state
        Z: Nuclear charge; validated, but the value does not depend on it
        space: Position or momentum
        q: Quadrature tolerances for the entropic and quartic integrals

    Returns:
        float: C_LMC
    """
    check_charge(Z)
    space = Space.parse(space)
    t_value = shannon_decomposition(state, space, q).t_value
    return float(disequilibrium(state, 1.0, space, q) * np.exp(t_value))


def fisher_shannon(state: HyperState, Z: float, space: Union[Space, str],
                   q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """F·exp((2/D)S)/(2πe)."""
    check_charge(Z)
    space = Space.parse(space)
    t_value = shannon_decomposition(state, space, q).t_value
    return float(fisher_information(state, 1.0, space) * np.exp(2.0 * t_value / state.D)
                 / (2.0 * np.pi * np.e))


def cramer_rao(state: HyperState, Z: float, space: Union[Space, str],
               q: QuadratureSpec = DEFAULT_QUADRATURE, pairing: str = 'canonical') -> float:
    """
    F·V.

    pairing='canonical' uses the oracle momentum variance; pairing='printed'
    uses the printed momentum variance. Position space has one variance only.
    """
    check_charge(Z)
    space = Space.parse(space)
    if pairing == 'canonical':
        spread, _ = canonical_variance(state, 1.0, space, q)
    elif pairing == 'printed':
        spread = variance(state, 1.0, space).value
    else:
        raise ValueError(f"Unknown pairing '{pairing}' (expected 'canonical' or 'printed')")
    return float(fisher_information(state, 1.0, space) * spread)


def cramer_rao_printed(state: HyperState, space: Union[Space, str]) -> float:
    """The Cramér-Rao expressions exactly as printed, including (n − |m|) and L²(L+1) in position space."""
    eta, L, m, n = state.eta, state.L, state.m, state.n
    if Space.parse(space) is Space.POSITION:
        return (n - m) * (eta * eta * (eta * eta + 2.0) - L * L * (L + 1.0)) / eta ** 3
    return 2.0 * (1.0 - 4.0 / np.pi ** 2) * (5.0 * eta * eta - 3.0 * L * (L + 1.0)
                                             - m * (8.0 * eta - 6.0 * L - 3.0) - 1.0)


def _bounds(lmc_value: float, fs_value: float, cr_value: float, D: int) -> BoundReport:
    return BoundReport(
        lmc=Bound(lmc_value, 1.0, lmc_value >= 1.0 - 1e-9, asserted=True),
        fisher_shannon=Bound(fs_value, float(D), fs_value >= D - 1e-9, asserted=True),
        cramer_rao=Bound(cr_value, float(D * D), cr_value >= D * D - 1e-9, asserted=False),
    )


def bound_report(triple: ComplexityTriple, D: int) -> BoundReport:
    """Recompute the lower-bound outcomes of a triple for dimension D."""
    return _bounds(triple.lmc, triple.fisher_shannon, triple.cramer_rao, D)


def complexity_triple(state: HyperState, Z: float, space: Union[Space, str],
                      q: QuadratureSpec = DEFAULT_QUADRATURE) -> ComplexityTriple:
    space = Space.parse(space)
    values = (lmc(state, Z, space, q), fisher_shannon(state, Z, space, q), cramer_rao(state, Z, space, q))
    report = _bounds(*values, state.D)
    if not report.cramer_rao.satisfied:
        logger.info("%s %s: C_CR = %.6g below D² = %d", state.label, space.value, values[2], state.D ** 2)
    return ComplexityTriple(*values, space=space, bound_report=report)


@dataclass(frozen=True)
class StateReport:
    """Everything computed for one state: parameters, measures and complexities per space."""

    state: HyperState
    Z: float
    params: DerivedParams
    measures: Dict[Space, MeasureSet]
    complexities: Dict[Space, ComplexityTriple]

    def to_json(self) -> Dict[str, Any]:
        return {
            'state': self.state.to_json(),
            'params': self.params.to_json(),
            'measures': {space.value: m.to_json() for space, m in self.measures.items()},
            'complexities': {space.value: c.to_json() for space, c in self.complexities.items()},
            'bounds': {space.value: c.bound_report.to_json() for space, c in self.complexities.items()},
        }


def compute_state(state: HyperState, Z: float, spaces: Tuple[Union[Space, str], ...] = (Space.POSITION,),
                  q: QuadratureSpec = DEFAULT_QUADRATURE) -> StateReport:
    """Measures and complexities of one state in the requested spaces."""
    parsed = [Space.parse(space) for space in spaces]
    return StateReport(
        state=state,
        Z=check_charge(Z),
        params=derived_params(state, Z),
        measures={space: measure_set(state, Z, space, q) for space in parsed},
        complexities={space: complexity_triple(state, Z, space, q) for space in parsed},
    )
