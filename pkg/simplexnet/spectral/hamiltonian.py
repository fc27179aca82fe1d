"""Transverse-field Ising Hamiltonians and the diagonal W-penalty operators."""

import logging
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import LinearOperator

from simplexnet.bits import bit_matrix, chunk_ranges, flip_mask
from simplexnet.lattice.base_lattice import BaseLattice, Edge
from simplexnet.limits import CHUNK_SIZE, MAX_HAMILTONIAN_SITES, check_cap
from simplexnet.spectral.couplings import classical_energies, default_couplings, normalize_couplings

logger = logging.getLogger("simplexnet")


@dataclass(frozen=True, eq=False)
class HamiltonianSpec:
    """H = sum_edges J_ij sz_i sz_j + field * sum_i sx_i; J > 0 is antiferromagnetic."""

    lattice: BaseLattice
    couplings: Optional[Mapping[Edge, float]] = None
    field: float = 0.0

    def __post_init__(self):
        if self.couplings is None:
            couplings = default_couplings(self.lattice)
        else:
            couplings = normalize_couplings(self.lattice, self.couplings)
        object.__setattr__(self, "couplings", couplings)

    @property
    def n_sites(self) -> int:
        return self.lattice.n_sites

    def with_field(self, value: float) -> "HamiltonianSpec":
        return HamiltonianSpec(self.lattice, self.couplings, value)


def diagonal_energies(spec: HamiltonianSpec, max_sites: int = MAX_HAMILTONIAN_SITES) -> np.ndarray:
    n = spec.n_sites
    check_cap("Hamiltonian", n, max_sites)
    dim = 2 ** n
    diagonal = np.empty(dim, dtype=float)
    for start, stop in chunk_ranges(dim, CHUNK_SIZE):
        diagonal[start:stop] = classical_energies(n, spec.couplings, np.arange(start, stop))
    return diagonal


def build_hamiltonian(spec: HamiltonianSpec, max_sites: int = MAX_HAMILTONIAN_SITES) -> sparse.csr_matrix:
    """Sparse 2^n x 2^n operator; sx terms are single-bit flips."""
    n = spec.n_sites
    diagonal = diagonal_energies(spec, max_sites)
    dim = 2 ** n
    index = np.arange(dim, dtype=np.int64)

    rows, cols, data = [index], [index], [diagonal]
    if spec.field != 0:
        for site in range(n):
            rows.append(index)
            cols.append(index ^ flip_mask(site, n))
            data.append(np.full(dim, float(spec.field)))

    matrix = sparse.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(dim, dim)
    ).tocsr()
    matrix.eliminate_zeros()
    logger.debug("Built Hamiltonian on %d sites with %d nonzeros", n, matrix.nnz)
    return matrix


def hamiltonian_operator(spec: HamiltonianSpec, max_sites: int = MAX_HAMILTONIAN_SITES) -> LinearOperator:
    """Matrix-free form of build_hamiltonian for iterative eigensolvers."""
    n = spec.n_sites
    diagonal = diagonal_energies(spec, max_sites)
    dim = 2 ** n
    index = np.arange(dim, dtype=np.int64)
    flips = [index ^ flip_mask(site, n) for site in range(n)] if spec.field != 0 else []
    field_value = float(spec.field)

    def matvec(vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector).reshape(-1)
        result = diagonal * vector
        for flipped in flips:
            result = result + field_value * vector[flipped]
        return result

    return LinearOperator((dim, dim), matvec=matvec, rmatvec=matvec, dtype=float)


def _triangle_sums(lattice: BaseLattice, max_sites: int):
    n = lattice.n_sites
    check_cap("Hamiltonian", n, max_sites)
    triangles = [t for t in lattice.simplices if len(t) == 3]
    for start, stop in chunk_ranges(2 ** n, CHUNK_SIZE):
        bits = bit_matrix(np.arange(start, stop), n).astype(np.int64)
        yield start, stop, [bits[:, list(t)].sum(axis=1) for t in triangles]


def build_hw(lattice: BaseLattice, max_sites: int = MAX_HAMILTONIAN_SITES) -> sparse.csr_matrix:
    """Diagonal sum over up-triangles of (z_i + z_j + z_k - 1)^2, z = (1 + sz) / 2."""
    diagonal = np.zeros(2 ** lattice.n_sites)
    for start, stop, sums in _triangle_sums(lattice, max_sites):
        diagonal[start:stop] = sum(((s - 1) ** 2 for s in sums), np.zeros(stop - start, dtype=np.int64))
    return sparse.diags(diagonal, format="csr")


def build_penalty_form(lattice: BaseLattice, max_sites: int = MAX_HAMILTONIAN_SITES) -> sparse.csr_matrix:
    """Antiferromagnetic bond sum rewritten as two quadratic penalties per up-triangle."""
    diagonal = np.zeros(2 ** lattice.n_sites)
    for start, stop, sums in _triangle_sums(lattice, max_sites):
        terms = ((s - 1) ** 2 + (s - 2) ** 2 - 2 for s in sums)
        diagonal[start:stop] = sum(terms, np.zeros(stop - start, dtype=np.int64))
    return sparse.diags(diagonal, format="csr")


def build_hw_expanded(lattice: BaseLattice, max_sites: int = MAX_HAMILTONIAN_SITES) -> sparse.csr_matrix:
    """H_W in spin form: half the bond sum, plus half the degree-weighted field, plus |T*|."""
    n = lattice.n_sites
    check_cap("Hamiltonian", n, max_sites)
    triangles = [t for t in lattice.simplices if len(t) == 3]
    degrees = np.zeros(n, dtype=np.int64)
    for triangle in triangles:
        degrees[list(triangle)] += 1
    bonds = {}
    for triangle in triangles:
        for a in range(3):
            for b in range(a + 1, 3):
                edge = tuple(sorted((triangle[a], triangle[b])))
                bonds[edge] = bonds.get(edge, 0) + 1

    diagonal = np.empty(2 ** n)
    for start, stop in chunk_ranges(2 ** n, CHUNK_SIZE):
        spins = 2 * bit_matrix(np.arange(start, stop), n).astype(np.int64) - 1
        bond_sum = classical_energies(n, bonds, np.arange(start, stop))
        diagonal[start:stop] = 0.5 * bond_sum + 0.5 * (spins @ degrees) + len(triangles)
    return sparse.diags(diagonal, format="csr")
