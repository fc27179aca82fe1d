"""Edge couplings and classical Ising energies.

Every lattice edge carries J once by default. With ``per_triangle`` the bond sum
runs over up-triangles instead, so an edge shared by two up-triangles carries 2J.
Spins are s = 2x - 1.
"""

from typing import Dict, Mapping

import numpy as np

from simplexnet.bits import bit_matrix
from simplexnet.errors import LatticeError
from simplexnet.lattice.base_lattice import BaseLattice, Edge, normalize_edge
from simplexnet.lattice.triangular import LatticeGraph, edge_directions

Couplings = Dict[Edge, float]


def default_couplings(lattice: BaseLattice, J: float = 1.0, per_triangle: bool = False) -> Couplings:
    multiplicity = getattr(lattice, "edge_multiplicity", None)
    if not per_triangle or multiplicity is None:
        return {e: J for e in lattice.edges}
    return {e: J * m for e, m in multiplicity.items()}


def anisotropic_couplings(lattice: LatticeGraph, diagonal: float = 1.0, horizontal: float = -1.0) -> Couplings:
    """Direction-dependent couplings: one value for diagonal edges, another for horizontal ones."""
    return {e: horizontal if direction == "horizontal" else diagonal
            for e, direction in edge_directions(lattice).items()}


def normalize_couplings(lattice: BaseLattice, couplings: Mapping) -> Couplings:
    edges = set(lattice.edges)
    normalized = {}
    for (i, j), value in couplings.items():
        edge = normalize_edge(int(i), int(j))
        if edge not in edges:
            raise LatticeError(f"Coupling on {edge} which is not a lattice edge")
        normalized[edge] = float(value)
    return normalized


def couplings_are_integral(couplings: Mapping[Edge, float]) -> bool:
    return all(float(v).is_integer() for v in couplings.values())


def classical_energies(n_sites: int, couplings: Mapping[Edge, float], indices: np.ndarray) -> np.ndarray:
    """Sum of J s_i s_j for each basis index; int64 when every coupling is integral."""
    spins = 2 * bit_matrix(indices, n_sites).astype(np.int64) - 1
    if couplings_are_integral(couplings):
        energies = np.zeros(len(spins), dtype=np.int64)
        for (i, j), value in couplings.items():
            energies += int(value) * spins[:, i] * spins[:, j]
    else:
        energies = np.zeros(len(spins), dtype=float)
        for (i, j), value in couplings.items():
            energies += value * spins[:, i] * spins[:, j]
    return energies


def minimum_bond_energy(couplings: Mapping[Edge, float]) -> float:
    """Sum of per-edge minima, -sum |J|."""
    return -float(sum(abs(v) for v in couplings.values()))
