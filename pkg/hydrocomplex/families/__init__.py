from typing import Iterable, List

from ..core import HyperState
from .circular import (
    CircularState,
    circular_disequilibrium,
    circular_lmc,
    circular_momentum_density,
    circular_position_density,
    circular_shannon,
    circular_state,
)
from .ground import GroundState, ground_state, ground_state_lmc


def chain_family(D: int, n: int) -> List[HyperState]:
    """All-zero, intermediate descending, and circular chains for (D, n), without duplicates."""
    chains = [
        (0,) * (D - 1),
        tuple(max(n - 1 - i, 0) for i in range(1, D)),
        (n - 1,) * (D - 1),
    ]
    seen = []
    for chain in chains:
        if chain not in seen:
            seen.append(chain)
    return [HyperState(D=D, n=n, mu=chain) for chain in seen]


def state_battery(dims: Iterable[int] = (2, 3, 4, 6), n_max: int = 4) -> List[HyperState]:
    """The cross-validation battery, ordered D major, n minor."""
    return [state for D in dims for n in range(1, n_max + 1) for state in chain_family(D, n)]


__all__ = [
    'CircularState',
    'GroundState',
    'chain_family',
    'circular_disequilibrium',
    'circular_lmc',
    'circular_momentum_density',
    'circular_position_density',
    'circular_shannon',
    'circular_state',
    'ground_state',
    'ground_state_lmc',
    'state_battery',
]
