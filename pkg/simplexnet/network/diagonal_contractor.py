import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from simplexnet.bits import bit_matrix, chunk_ranges, local_index
from simplexnet.limits import CHUNK_SIZE, MAX_STATE_SITES, check_cap
from simplexnet.network.base_contractor import BaseContractor, ContractionResult
from simplexnet.network.spec import NetworkSpec
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")


def simplex_product(simplices: Sequence[Tuple[Sequence[int], np.ndarray]], n_bits: int,
                    indices: np.ndarray, positions: Optional[Mapping[int, int]] = None) -> np.ndarray:
    """Product over simplices of the amplitude at each configuration's restriction.

    ``positions`` maps a site to its bit position when ``indices`` cover a subset of sites.
    """
    values = np.ones(len(indices), dtype=complex)
    for sites, amplitudes in simplices:
        bit_positions = [positions[s] for s in sites] if positions is not None else list(sites)
        values *= amplitudes[local_index(bit_matrix(indices, n_bits, bit_positions))]
    return values


class DiagonalContractor(BaseContractor):
    """Contracts by evaluating every physical configuration; copy projectors make the network diagonal."""

    def __init__(self, workers: int = 1, chunk_size: int = CHUNK_SIZE, max_sites: int = MAX_STATE_SITES):
        self.workers = workers
        self.chunk_size = chunk_size
        self.max_sites = max_sites

    @property
    def method(self) -> str:
        return "diagonal"

    def contract(self, spec: NetworkSpec) -> ContractionResult:
        n = spec.n_sites
        check_cap("State", n, self.max_sites)
        simplices = [(sites, state.amplitudes)
                     for sites, state in zip(spec.lattice.simplices, spec.simplex_assignment)]
        dim = 2 ** n
        amplitudes = np.empty(dim, dtype=complex)

        def fill(bounds: Tuple[int, int]) -> None:
            start, stop = bounds
            amplitudes[start:stop] = simplex_product(simplices, n, np.arange(start, stop, dtype=np.int64))

        ranges = list(chunk_ranges(dim, self.chunk_size))
        if self.workers > 1 and len(ranges) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                list(pool.map(fill, ranges))
        else:
            for bounds in ranges:
                fill(bounds)

        norm_squared = float(np.vdot(amplitudes, amplitudes).real)
        return ContractionResult(amplitudes, norm_squared, dim, self.method)


def contract_diagonal(spec: NetworkSpec, workers: int = 1, max_sites: int = MAX_STATE_SITES) -> PureState:
    return DiagonalContractor(workers=workers, max_sites=max_sites).contract_state(spec)
