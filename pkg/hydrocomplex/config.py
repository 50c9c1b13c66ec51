"""
Run configuration: quadrature tolerances, validation gate and sweep workers.

Values resolve in the order defaults < config file < environment < CLI flags.
The config file is plain `key = value` lines; `#` starts a comment.
"""

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from .quadrature import QuadratureSpec

logger = logging.getLogger(__name__)

WORKERS_ENV = "HYDROCOMPLEX_WORKERS"

_QUADRATURE_KEYS = {f.name: f.type for f in fields(QuadratureSpec)}
_CASTS = {'rel_tol': float, 'abs_tol': float, 'max_panels': int, 'tail_cut': float,
          'fail_tol': float, 'gate': float, 'workers': int}


@dataclass(frozen=True)
class Settings:
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
    gate: float = 1e-6  # relative agreement gate of the validation report
    workers: int = 0    # sweep processes; 0 runs in-process

    def __post_init__(self) -> None:
        if not self.gate > 0.0:
            raise ValueError(f"Validation gate must be positive, got {self.gate}")
        if self.workers < 0:
            raise ValueError(f"Worker count must be non-negative, got {self.workers}")

    def to_json(self) -> Dict[str, Any]:
        return {'quadrature': self.quadrature.to_json(), 'gate': self.gate, 'workers': self.workers}


def _cast(key: str, raw: str) -> Union[int, float]:
    try:
        return _CASTS[key](raw)
    except ValueError:
        raise ValueError(f"Config value for '{key}' is not a number: {raw!r}") from None


def load_config(path: Union[str, Path]) -> Dict[str, Union[int, float]]:
    """
    Read a key = value config file.

    Args:
        path: File to read

    Returns:
        dict: Parsed values, keyed by QuadratureSpec field name, 'gate' or 'workers'

    Raises:
        ValueError: On malformed lines, unknown keys or non-numeric values
    """
    values: Dict[str, Union[int, float]] = {}
    for number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ValueError(f"{path}:{number}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split('=', 1))
        if key not in _CASTS:
            raise ValueError(f"{path}:{number}: unknown key '{key}'")
        values[key] = _cast(key, raw)
    logger.debug("Loaded %d setting(s) from %s", len(values), path)
    return values


def resolve_settings(path: Optional[Union[str, Path]] = None,
                     environ: Optional[Mapping[str, str]] = None,
                     overrides: Optional[Mapping[str, Any]] = None) -> Settings:
    """Layer defaults, config file, environment and flag overrides (None entries are skipped)."""
    merged: Dict[str, Any] = {}
    if path is not None:
        merged.update(load_config(path))
    env = os.environ if environ is None else environ
    if env.get(WORKERS_ENV):
        merged['workers'] = _cast('workers', env[WORKERS_ENV])
    for key, value in (overrides or {}).items():
        if value is not None:
            if key not in _CASTS:
                raise ValueError(f"Unknown setting '{key}'")
            merged[key] = value

    quadrature = replace(QuadratureSpec(), **{k: v for k, v in merged.items() if k in _QUADRATURE_KEYS})
    return Settings(quadrature=quadrature, gate=float(merged.get('gate', 1e-6)),
                    workers=int(merged.get('workers', 0)))
