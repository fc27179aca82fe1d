"""Ground states in the limit of vanishing transverse field."""

import logging
from typing import Optional

import numpy as np
from scipy import linalg, sparse
from scipy.sparse.linalg import eigsh

from simplexnet.bits import flip_mask
from simplexnet.errors import DegenerateGroundStateError, EmptyManifoldError, SimplexNetError
from simplexnet.frustration.manifold import GroundManifold, enumerate_ground
from simplexnet.limits import DENSE_DIAGONALIZATION_SITES, MAX_HAMILTONIAN_SITES, MAX_STATE_SITES, check_cap
from simplexnet.spectral.hamiltonian import HamiltonianSpec, build_hamiltonian, hamiltonian_operator
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")

GAP_TOLERANCE = 1e-9
DENSE_MANIFOLD_SIZE = 2048


def ground_state_small_lambda(spec: HamiltonianSpec, field: Optional[float] = None,
                              max_sites: int = MAX_HAMILTONIAN_SITES,
                              dense_max_sites: int = DENSE_DIAGONALIZATION_SITES,
                              gap_tolerance: float = GAP_TOLERANCE) -> PureState:
    """Lowest eigenvector at a small positive field, largest amplitude made real positive."""
    if field is not None:
        spec = spec.with_field(field)
    if spec.field <= 0:
        raise SimplexNetError(f"Transverse field must be positive, got {spec.field}")

    n = spec.n_sites
    check_cap("Hamiltonian", n, max_sites)
    if n <= dense_max_sites:
        matrix = build_hamiltonian(spec, max_sites).toarray()
        values, vectors = linalg.eigh(matrix, subset_by_index=[0, 1])
    else:
        operator = hamiltonian_operator(spec, max_sites)
        start = np.ones(operator.shape[0]) / np.sqrt(operator.shape[0])
        values, vectors = eigsh(operator, k=2, which="SA", v0=start)
        order = np.argsort(values)
        values, vectors = values[order], vectors[:, order]

    gap = values[1] - values[0]
    if gap < gap_tolerance:
        raise DegenerateGroundStateError(
            f"Lowest eigenvalue is degenerate within {gap:.2e} at field {spec.field}; increase the field"
        )
    logger.info("Ground energy %.6f with gap %.3e on %d sites (field %.3g)", values[0], gap, n, spec.field)
    return PureState.from_amplitudes(vectors[:, 0]).align_phase()


def projected_flip_matrix(manifold: GroundManifold) -> sparse.csr_matrix:
    """Sum of sx projected onto the manifold: adjacency of its single-flip graph."""
    n = manifold.lattice.n_sites
    indices = manifold.indices()
    position = {int(index): p for p, index in enumerate(indices)}
    rows, cols = [], []
    for p, index in enumerate(indices):
        for site in range(n):
            q = position.get(int(index) ^ flip_mask(site, n))
            if q is not None:
                rows.append(p)
                cols.append(q)
    size = len(indices)
    return sparse.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size))


def degenerate_pt_ground(spec: HamiltonianSpec, manifold: Optional[GroundManifold] = None,
                         max_state_sites: int = MAX_STATE_SITES) -> PureState:
    """First-order degenerate perturbation theory in the transverse field.

    The field sign selects the lowest eigenvector of sign(field) * P sx P; a zero
    field is treated as positive.
    """
    if manifold is None:
        manifold = enumerate_ground(spec.lattice, spec.couplings)
    if manifold.degeneracy == 0:
        raise EmptyManifoldError("Ground manifold is empty")

    n = spec.n_sites
    check_cap("State", n, max_state_sites)
    if manifold.degeneracy == 1:
        return PureState.basis(manifold.configurations[0])

    sign = -1.0 if spec.field < 0 else 1.0
    projected = sign * projected_flip_matrix(manifold)
    if manifold.degeneracy <= DENSE_MANIFOLD_SIZE:
        values, vectors = linalg.eigh(projected.toarray())
    else:
        values, vectors = eigsh(projected, k=2, which="SA")
        order = np.argsort(values)
        values, vectors = values[order], vectors[:, order]

    if values[1] - values[0] < GAP_TOLERANCE:
        logger.warning("First-order spectrum on the ground manifold is degenerate (%.3e, %.3e); "
                       "returning one vector of the lowest eigenspace", values[0], values[1])

    amplitudes = np.zeros(2 ** n, dtype=complex)
    amplitudes[manifold.indices()] = vectors[:, 0]
    logger.info("Lowest projected eigenvalue %.6f on a manifold of %d states", values[0], manifold.degeneracy)
    return PureState.from_amplitudes(amplitudes).align_phase()
