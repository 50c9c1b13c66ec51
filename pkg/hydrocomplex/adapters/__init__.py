from .report import report_json, rows_frame, state_rows, to_csv, to_json_text, to_table
from .validation import ValidationRow, validation_frame, validation_report, validation_rows

__all__ = [
    'ValidationRow',
    'report_json',
    'rows_frame',
    'state_rows',
    'to_csv',
    'to_json_text',
    'to_table',
    'validation_frame',
    'validation_report',
    'validation_rows',
]
