import json
import math

import pytest

from hydrocomplex import compute_state, ground_state
from hydrocomplex.adapters import rows_frame, state_rows, to_csv, to_json_text, to_table
from hydrocomplex.adapters.validation import relative_deviation, validation_frame, validation_rows


def test_json_rounding_and_nan():
    text = to_json_text({'a': 1.0 / 3.0, 'b': [float('nan'), 2], 'c': {'d': True}})
    payload = json.loads(text)
    assert payload['a'] == 0.333333333333333
    assert payload['b'] == [None, 2]
    assert payload['c'] == {'d': True}


def test_state_rows_and_formats():
    report = compute_state(ground_state(2), 1.0, ('position', 'momentum'))
    rows = state_rows(report)
    assert len(rows) == 2 * 8
    assert [row['measure'] for row in rows[:8]] == ['normalization', 'disequilibrium', 'shannon', 'fisher',
                                                     'variance', 'lmc', 'fs', 'cr']
    frame = rows_frame(rows)
    assert 'error' not in frame.columns
    csv = to_csv(frame)
    assert csv.splitlines()[0] == 'D,n,mu,Z,space,measure,value,err_estimate'
    assert csv == to_csv(rows_frame(state_rows(report)))
    assert 'lmc' in to_table(frame)


def test_error_column_kept_when_needed():
    frame = rows_frame([{'D': 3, 'n': 1, 'mu': '1,0', 'Z': 1.0, 'space': 'position', 'measure': 'lmc',
                         'value': math.nan, 'err_estimate': math.nan, 'error': 'l ≤ n−1 violated'}])
    assert list(frame.columns)[-1] == 'error'


def test_relative_deviation():
    assert relative_deviation(1.1, 1.0) == pytest.approx(0.1)
    assert relative_deviation(0.0, 0.0) == 0.0
    assert math.isnan(relative_deviation(math.nan, 1.0))


def test_validation_rows_two_dimensional_ground_state():
    rows = validation_rows(ground_state(2))
    frame = validation_frame(rows)
    statuses = dict(zip(zip(frame['quantity'], frame['space']), frame['status']))
    for quantity in ('normalization', 'disequilibrium', 'shannon', 'fisher'):
        assert statuses[(quantity, 'position')] == 'agree'
        assert statuses[(quantity, 'momentum')] == 'agree'
    assert statuses[('variance', 'position')] == 'agree'
    assert statuses[('C_CR printed', 'position')] == 'informational'
    assert set(frame['status']) <= {'agree', 'discrepancy', 'informational'}
