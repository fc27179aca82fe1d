"""Classical ground-manifold enumeration and W-structure checks."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from simplexnet.bits import bit_matrix, bits_to_index, chunk_ranges, index_to_bits
from simplexnet.errors import EmptyManifoldError, StateError
from simplexnet.lattice.base_lattice import BaseLattice, Edge
from simplexnet.lattice.triangular import build_triangular_patch
from simplexnet.limits import CHUNK_SIZE, MAX_ENUMERATION_SITES, MAX_STATE_SITES, check_cap
from simplexnet.spectral.couplings import (
    classical_energies, couplings_are_integral, default_couplings, minimum_bond_energy, normalize_couplings,
)
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")

ENERGY_TOLERANCE = 1e-9
BULK_WANNIER_EXPONENT = 0.488


@dataclass(frozen=True)
class GroundManifold:
    lattice: BaseLattice = field(repr=False, compare=False)
    configurations: Tuple[str, ...]
    energy: float

    def __post_init__(self):
        configurations = tuple(self.configurations)
        if list(configurations) != sorted(set(configurations)):
            raise StateError("Ground configurations must be sorted and duplicate-free")
        if any(len(c) != self.lattice.n_sites for c in configurations):
            raise StateError("Ground configurations must have one bit per site")
        object.__setattr__(self, "configurations", configurations)

    @property
    def degeneracy(self) -> int:
        return len(self.configurations)

    def indices(self) -> np.ndarray:
        return np.array([bits_to_index(c) for c in self.configurations], dtype=np.int64)

    def __contains__(self, bitstring: str) -> bool:
        return bitstring in set(self.configurations)


def _chunk_minimizers(n: int, couplings: Mapping[Edge, float], start: int, stop: int,
                      sector: Optional[int]) -> Tuple[float, np.ndarray]:
    indices = np.arange(start, stop, dtype=np.int64)
    if sector is not None:
        indices = indices[((indices >> (n - 1)) & 1) == sector]
        if indices.size == 0:
            return math.inf, indices
    energies = classical_energies(n, couplings, indices)
    best = energies.min()
    if energies.dtype.kind == "i":
        return int(best), indices[energies == best]
    return float(best), indices[energies <= best + ENERGY_TOLERANCE]


def enumerate_ground(lattice: BaseLattice, couplings: Optional[Mapping[Edge, float]] = None,
                     sector: Optional[int] = None, max_sites: int = MAX_ENUMERATION_SITES,
                     chunk_size: int = CHUNK_SIZE, workers: int = 1) -> GroundManifold:
    """Exhaustive scan of all 2^n configurations for the minimum of sum J s_i s_j.

    ``sector`` keeps only configurations whose site 0 carries that bit.
    """
    n = lattice.n_sites
    check_cap("Enumeration", n, max_sites)
    couplings = default_couplings(lattice) if couplings is None else normalize_couplings(lattice, couplings)
    if sector not in (None, 0, 1):
        raise ValueError(f"Sector must be 0, 1 or None, got {sector!r}")

    ranges = list(chunk_ranges(2 ** n, chunk_size))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: _chunk_minimizers(n, couplings, r[0], r[1], sector), ranges))
    else:
        results = [_chunk_minimizers(n, couplings, start, stop, sector) for start, stop in ranges]

    energy = min(best for best, _ in results)
    if couplings_are_integral(couplings):
        minimizers = [idx for best, idx in results if best == energy]
    else:
        minimizers = [idx[classical_energies(n, couplings, idx) <= energy + ENERGY_TOLERANCE]
                      for best, idx in results if best <= energy + ENERGY_TOLERANCE]
    indices = np.sort(np.concatenate(minimizers)) if minimizers else np.array([], dtype=np.int64)

    configurations = tuple(index_to_bits(i, n) for i in indices)
    logger.info("Ground manifold on %d sites: M=%d, E0=%s", n, len(configurations), energy)
    return GroundManifold(lattice=lattice, configurations=configurations, energy=energy)


def equal_superposition(manifold: GroundManifold, max_state_sites: int = MAX_STATE_SITES) -> PureState:
    if manifold.degeneracy == 0:
        raise EmptyManifoldError("Cannot superpose an empty manifold")
    n = manifold.lattice.n_sites
    check_cap("State", n, max_state_sites)
    amplitudes = np.zeros(2 ** n, dtype=complex)
    amplitudes[manifold.indices()] = 1.0
    return PureState.from_amplitudes(amplitudes)


@dataclass(frozen=True)
class WStructureReport:
    passed: bool
    checked: int
    witnesses: Tuple[Tuple[str, Tuple[int, ...]], ...]

    def summary(self) -> str:
        if self.passed:
            return f"pass ({self.checked} basis states checked)"
        shown = ", ".join(f"{config} on {triangle}" for config, triangle in self.witnesses[:5])
        return f"fail ({len(self.witnesses)} monochromatic up-triangles: {shown})"


def verify_w_structure(state: PureState, lattice: BaseLattice, threshold: float = 1e-10) -> WStructureReport:
    """Every supported basis state must leave each up-triangle non-monochromatic."""
    if state.n_qubits != lattice.n_sites:
        raise StateError("State and lattice sizes differ")
    support = state.support_indices(threshold)
    bits = bit_matrix(support, lattice.n_sites)
    witnesses: List[Tuple[str, Tuple[int, ...]]] = []
    for triangle in (t for t in lattice.simplices if len(t) == 3):
        values = bits[:, list(triangle)]
        monochromatic = np.flatnonzero(values.min(axis=1) == values.max(axis=1))
        witnesses.extend((index_to_bits(support[row], lattice.n_sites), tuple(triangle)) for row in monochromatic)
    witnesses.sort()
    return WStructureReport(passed=not witnesses, checked=int(support.size), witnesses=tuple(witnesses))


def is_frustrated(lattice: BaseLattice, couplings: Optional[Mapping[Edge, float]] = None,
                  manifold: Optional[GroundManifold] = None) -> bool:
    """True when no configuration minimizes every bond at once."""
    couplings = default_couplings(lattice) if couplings is None else normalize_couplings(lattice, couplings)
    if manifold is None:
        manifold = enumerate_ground(lattice, couplings)
    return manifold.energy > minimum_bond_energy(couplings) + ENERGY_TOLERANCE


class WannierPoint(NamedTuple):
    side: int
    n_sites: int
    degeneracy: int
    exponent: float


def wannier_estimate(sides: Sequence[int], max_sites: int = MAX_ENUMERATION_SITES) -> List[WannierPoint]:
    """Finite-patch estimates of log2(M) / n; open patches do not extrapolate to the bulk."""
    points = []
    for side in sides:
        patch = build_triangular_patch(side)
        check_cap("Enumeration", patch.n_sites, max_sites)
        manifold = enumerate_ground(patch, max_sites=max_sites)
        exponent = math.log2(manifold.degeneracy) / patch.n_sites
        points.append(WannierPoint(side, patch.n_sites, manifold.degeneracy, exponent))
        logger.info("Side %d: n=%d M=%d log2(M)/n=%.4f", side, patch.n_sites, manifold.degeneracy, exponent)
    logger.info("Finite open patches only; no extrapolation to the bulk exponent %.3f is attempted",
                BULK_WANNIER_EXPONENT)
    return points
