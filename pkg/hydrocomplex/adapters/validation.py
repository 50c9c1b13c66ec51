"""
Closed-form versus oracle cross-validation report.

Each row pairs a closed-form (or printed) value with its brute-force
quadrature counterpart. Rows whose reference is not expected to agree, such
as printed functionals with a known divergence or the Cramér-Rao bound, are
tagged informational and never count as failures.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List

import pandas as pd

from ..complexity import cramer_rao, cramer_rao_printed, lmc
from ..core import DomainError, HyperState, QuadratureAccuracyError, Space
from ..families import circular_disequilibrium, circular_lmc, circular_shannon
from ..measures import (
    DEFAULT_QUADRATURE,
    disequilibrium,
    fisher_information,
    momentum_moments_printed,
    normalization_estimate,
    position_moments,
    printed_disequilibrium,
    shannon_entropy,
    variance,
)
from ..oracle import (
    oracle_disequilibrium,
    oracle_entropy,
    oracle_fisher,
    oracle_moment,
    oracle_normalization,
    oracle_variance,
)
from ..quadrature import QuadratureSpec

logger = logging.getLogger(__name__)

AGREE = 'agree'
DISCREPANCY = 'discrepancy'
INFORMATIONAL = 'informational'


@dataclass(frozen=True)
class ValidationRow:
    quantity: str
    state: str
    space: str
    closed_form: float
    oracle: float
    deviation: float
    status: str

    def to_json(self) -> Dict[str, Any]:
        return {
            'quantity': self.quantity,
            'state': self.state,
            'space': self.space,
            'closed_form': self.closed_form,
            'oracle': self.oracle,
            'deviation': self.deviation,
            'status': self.status,
        }


def relative_deviation(value: float, reference: float) -> float:
    if math.isnan(value) or math.isnan(reference):
        return float('nan')
    scale = abs(reference) if reference != 0.0 else 1.0
    return abs(value - reference) / scale


def _row(quantity: str, state: HyperState, space: Space, closed_form: float, oracle: float,
         gate: float, informational: bool = False) -> ValidationRow:
    deviation = relative_deviation(closed_form, oracle)
    if informational:
        status = INFORMATIONAL
    else:
        status = AGREE if deviation <= gate else DISCREPANCY
    if status == DISCREPANCY:
        logger.info("%s %s %s: %.15g vs oracle %.15g (deviation %.3g)",
                    state.label, space.value, quantity, closed_form, oracle, deviation)
    return ValidationRow(quantity, state.label, space.value, float(closed_form), float(oracle),
                         deviation, status)


def _safe(compute: Callable[[], float], what: str) -> float:
    """Quadrature failures become NaN so the report keeps going."""
    try:
        return float(compute())
    except (QuadratureAccuracyError, DomainError) as exc:
        logger.warning("%s: %s", what, exc)
        return float('nan')


def validation_rows(state: HyperState, Z: float = 1.0, q: QuadratureSpec = DEFAULT_QUADRATURE,
                    gate: float = 1e-6) -> List[ValidationRow]:
    """
    All validation rows of one state, position space first.

    Args:
        state: Hydrogenic state
        Z: Nuclear charge used for both sides
        q: Quadrature tolerances for closed-form integrals and the oracle
        gate: Relative deviation at or below which a row agrees

    Returns:
        list: ValidationRow records in a fixed order
    """
    rows: List[ValidationRow] = []
    for space in (Space.POSITION, Space.MOMENTUM):
        def oracle(compute: Callable[[], float], quantity: str) -> float:
            return _safe(compute, f"{state.label} {space.value} {quantity}")

        rows.append(_row('normalization', state, space, normalization_estimate(state, space, q).value,
                         oracle(lambda: oracle_normalization(state, Z, space, q), 'normalization'), gate))
        square = oracle(lambda: oracle_disequilibrium(state, Z, space, q), 'disequilibrium')
        rows.append(_row('disequilibrium', state, space, disequilibrium(state, Z, space, q), square, gate))
        rows.append(_row('shannon', state, space, shannon_entropy(state, Z, space, q),
                         oracle(lambda: oracle_entropy(state, Z, space, q), 'shannon'), gate))
        rows.append(_row('fisher', state, space, fisher_information(state, Z, space),
                         oracle(lambda: oracle_fisher(state, Z, space, q), 'fisher'), gate))

        spread = oracle(lambda: oracle_variance(state, Z, space, q), 'variance')
        label = 'variance' if space is Space.POSITION else 'variance printed'
        rows.append(_row(label, state, space, variance(state, Z, space).value, spread, gate))

        if space is Space.POSITION:
            first, second = position_moments(state, Z)
            names = ('⟨r⟩', '⟨r²⟩')
        else:
            first, second = momentum_moments_printed(state, Z)
            names = ('⟨p⟩ printed', '⟨p²⟩ printed')
        for k, (name, value) in enumerate(zip(names, (first, second)), start=1):
            rows.append(_row(name, state, space, value,
                             oracle(lambda k=k: oracle_moment(state, Z, space, k, q), name), gate))

        rows.append(_row('disequilibrium printed', state, space,
                         _safe(lambda: printed_disequilibrium(state, Z, space, q), 'printed functional'),
                         square, gate, informational=True))

        unit_spread = oracle(lambda: oracle_variance(state, 1.0, space, q), 'unit variance')
        rows.append(_row('C_CR printed', state, space, cramer_rao_printed(state, space),
                         fisher_information(state, 1.0, space) * unit_spread, gate, informational=True))
        rows.append(_row('C_CR ≥ D² bound', state, space,
                         _safe(lambda: cramer_rao(state, Z, space, q), 'C_CR'),
                         float(state.D ** 2), gate, informational=True))

        if state.is_circular:
            rows.extend(_circular_rows(state, Z, space, q, gate, rows))
    return rows


def _circular_rows(state: HyperState, Z: float, space: Space, q: QuadratureSpec, gate: float,
                   done: List[ValidationRow]) -> List[ValidationRow]:
    """Circular closed forms against the oracle values already in the report."""
    oracle_values = {row.quantity: row.oracle for row in done if row.space == space.value}
    n, D = state.n, state.D
    return [
        _row('circular disequilibrium', state, space, circular_disequilibrium(n, D, Z, space),
             oracle_values['disequilibrium'], gate),
        _row('circular shannon', state, space, circular_shannon(n, D, Z, space),
             oracle_values['shannon'], gate),
        _row('circular lmc', state, space, circular_lmc(n, D, space), lmc(state, Z, space, q), gate),
    ]


def validation_report(states: Iterable[HyperState], Z: float = 1.0,
                      q: QuadratureSpec = DEFAULT_QUADRATURE, gate: float = 1e-6) -> List[ValidationRow]:
    rows: List[ValidationRow] = []
    for state in states:
        logger.debug("Validating %s", state.label)
        rows.extend(validation_rows(state, Z, q, gate))
    return rows


def validation_frame(rows: List[ValidationRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_json() for row in rows],
                        columns=['quantity', 'state', 'space', 'closed_form', 'oracle', 'deviation', 'status'])
