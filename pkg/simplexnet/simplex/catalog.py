"""Named simplices used by the experiments."""

import math
from typing import Callable, Dict, Tuple

from simplexnet.simplex.states import (
    SimplexState, basis_simplex, ghz_state, symmetric_four, w_state, wbar_state, weight_strings,
)

# Reference entanglement entropies (ebits) for apex regions of n_A = 3, 6, 10 sites.
TABLE1_REFERENCE: Dict[str, Tuple[float, float, float]] = {
    "ghz": (1.0, 1.0, 1.0),
    "w": (math.log2(3), math.log2(3), math.log2(3)),
    "w+111": (2.0, 3.0, 4.0),
    "w+wbar": (2.183, 3.126, 5.053),
    "w+wbar+111": (1.815, 2.756, 4.314),
}
TABLE1_SIMPLICES = tuple(TABLE1_REFERENCE)
TABLE1_REGION_SIZES = (3, 6, 10)

# Reported entropy-maximizing symmetric 4-qubit coefficients.
SYM4_OPTIMUM = (1.0, -1.0, 1.0, 1.0, 1.0)

_CATALOG: Dict[str, Callable[[], SimplexState]] = {
    "ghz": lambda: ghz_state(3),
    "w": lambda: w_state(3),
    "wbar": lambda: wbar_state(3),
    "w+wbar": lambda: basis_simplex(weight_strings(3, 1) + weight_strings(3, 2), "w+wbar"),
    "w+111": lambda: basis_simplex(weight_strings(3, 1) + ["111"], "w+111"),
    "w+wbar+111": lambda: basis_simplex(weight_strings(3, 1) + weight_strings(3, 2) + ["111"], "w+wbar+111"),
    "ghz4": lambda: ghz_state(4),
    "w4": lambda: w_state(4),
    "sym4-optimum": lambda: symmetric_four(SYM4_OPTIMUM, "sym4-optimum"),
}


def available_simplices() -> Tuple[str, ...]:
    return tuple(_CATALOG)


def get_simplex(label: str) -> SimplexState:
    """Returns the catalog simplex for `label`; mixes are equal superpositions of allowed strings."""
    try:
        return _CATALOG[label]()
    except KeyError:
        raise ValueError(f"Unsupported simplex label: {label}") from None
