"""
Report emission: flat measure rows, pandas tables, CSV, JSON and text.

Every number leaves the package with 15 significant digits so that repeated
runs with the same flags produce byte-identical files.
"""

import json
import math
from typing import Any, Dict, Iterable, List, Mapping, Optional

import pandas as pd

from ..complexity import StateReport
from ..core import HyperState

FLOAT_FORMAT = '%.15g'
COLUMNS = ['D', 'n', 'mu', 'Z', 'space', 'measure', 'value', 'err_estimate']

MEASURE_FIELDS = ('normalization', 'disequilibrium', 'shannon', 'fisher', 'variance')
COMPLEXITY_FIELDS = {'lmc': 'lmc', 'fs': 'fisher_shannon', 'cr': 'cramer_rao'}


def mu_text(mu: Iterable[int]) -> str:
    return ','.join(str(value) for value in mu)


def measure_row(state: HyperState, Z: float, space: str, measure: str, value: float,
                err_estimate: float = 0.0, error: str = '') -> Dict[str, Any]:
    return {
        'D': state.D,
        'n': state.n,
        'mu': mu_text(state.mu),
        'Z': Z,
        'space': space,
        'measure': measure,
        'value': value,
        'err_estimate': err_estimate,
        'error': error,
    }


def state_rows(report: StateReport) -> List[Dict[str, Any]]:
    """One row per measure and complexity of a StateReport, in space order."""
    rows = []
    for space, measures in report.measures.items():
        for name in MEASURE_FIELDS:
            rows.append(measure_row(report.state, report.Z, space.value, name,
                                    getattr(measures, name), measures.errors.get(name, 0.0)))
        triple = report.complexities[space]
        for name, attribute in COMPLEXITY_FIELDS.items():
            rows.append(measure_row(report.state, report.Z, space.value, name, getattr(triple, attribute)))
    return rows


def rows_frame(rows: List[Mapping[str, Any]]) -> pd.DataFrame:
    """
    Tabulate measure rows.

    The `error` column is kept only when at least one row carries an error message.
    """
    frame = pd.DataFrame(list(rows), columns=COLUMNS + ['error'])
    if not frame['error'].fillna('').astype(str).str.len().any():
        frame = frame.drop(columns='error')
    return frame


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def to_table(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False, float_format=lambda value: FLOAT_FORMAT % value)


def _significant(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(FLOAT_FORMAT % value)
    if isinstance(value, Mapping):
        return {key: _significant(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_significant(item) for item in value]
    return value


def to_json_text(payload: Mapping[str, Any], indent: Optional[int] = 2) -> str:
    """Serialize a to_json() dict; floats rounded to 15 significant digits, NaN as null."""
    return json.dumps(_significant(payload), indent=indent, ensure_ascii=False)


def report_json(report: StateReport) -> str:
    return to_json_text(report.to_json())
