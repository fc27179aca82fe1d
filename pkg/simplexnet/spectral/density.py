"""Reduced density matrices and von Neumann entropy in ebits."""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg, stats

from simplexnet.bits import bit_matrix
from simplexnet.errors import StateError
from simplexnet.lattice.base_lattice import Region
from simplexnet.limits import MAX_REGION_SITES, check_cap
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")

EIGENVALUE_CLAMP = 1e-14
TRACE_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    region: Region
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=complex)
        dim = 2 ** self.region.size
        if matrix.shape != (dim, dim):
            raise StateError(f"Density matrix for {self.region.size} sites must be {dim}x{dim}")
        if not np.allclose(matrix, matrix.conj().T, atol=TRACE_TOLERANCE):
            raise StateError("Density matrix is not Hermitian")
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            raise StateError(f"Density matrix trace {trace:.3e} differs from 1")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    def eigenvalues(self) -> np.ndarray:
        return linalg.eigvalsh(self.matrix)

    def entropy(self) -> float:
        return entropy(self)

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))


def partial_trace(state: PureState, region: Region, max_region_sites: int = MAX_REGION_SITES) -> ReducedDensity:
    check_cap("Region", region.size, max_region_sites)
    if region.lattice.n_sites != state.n_qubits:
        raise StateError("Region lattice and state sizes differ")

    keep = list(region.sites)
    rest = list(region.complement().sites)
    psi = np.transpose(state.tensor(), keep + rest).reshape(2 ** len(keep), 2 ** len(rest))
    rho = psi @ psi.conj().T
    return ReducedDensity(region, (rho + rho.conj().T) / 2)


def entropy(rho: ReducedDensity) -> float:
    """Von Neumann entropy in ebits; eigenvalues below 1e-14 count as zero."""
    weights = rho.eigenvalues()
    weights = np.where(weights < EIGENVALUE_CLAMP, 0.0, weights)
    return float(stats.entropy(weights, base=2))


def zz_correlations(state: PureState) -> np.ndarray:
    """Matrix of <sz_i sz_j>, with sz = +1 on bit 1."""
    n = state.n_qubits
    probabilities = state.probabilities()
    support = np.flatnonzero(probabilities > 0)
    spins = 2 * bit_matrix(support, n).astype(float) - 1
    weighted = spins * probabilities[support, None]
    return spins.T @ weighted
