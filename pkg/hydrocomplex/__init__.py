from .complexity import (
    ComplexityTriple,
    StateReport,
    bound_report,
    compute_state,
    cramer_rao,
    fisher_shannon,
    lmc,
    shannon_decomposition,
)
from .config import Settings, load_config, resolve_settings
from .core import (
    DerivedParams,
    DomainError,
    HyperState,
    MeasureSet,
    QuadratureAccuracyError,
    Space,
    StateError,
    derived_params,
    validate_state,
)
from .families import (
    CircularState,
    GroundState,
    circular_lmc,
    circular_state,
    ground_state,
    ground_state_lmc,
)
from .measures import (
    disequilibrium,
    fisher_information,
    measure_set,
    shannon_entropy,
    variance,
)
from .quadrature import QuadratureSpec, integrate_adaptive

__all__ = [
    "CircularState",
    "ComplexityTriple",
    "DerivedParams",
    "DomainError",
    "GroundState",
    "HyperState",
    "MeasureSet",
    "QuadratureAccuracyError",
    "QuadratureSpec",
    "Settings",
    "Space",
    "StateError",
    "StateReport",
    "bound_report",
    "circular_lmc",
    "circular_state",
    "compute_state",
    "cramer_rao",
    "derived_params",
    "disequilibrium",
    "fisher_information",
    "fisher_shannon",
    "ground_state",
    "ground_state_lmc",
    "integrate_adaptive",
    "lmc",
    "load_config",
    "measure_set",
    "resolve_settings",
    "shannon_decomposition",
    "shannon_entropy",
    "validate_state",
    "variance",
]
