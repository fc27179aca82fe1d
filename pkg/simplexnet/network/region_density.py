"""Reduced density of a region without building the full state.

Simplices inside the region give a product factor F(a). The remaining simplices
are contracted as a ket/bra double layer where complement sites share one index
(traced) and region sites keep separate ket and bra indices, giving
K(a_b, a'_b) over the region sites those simplices touch. Then
rho(a, a') = F(a) F*(a') K(a_b, a'_b), normalized by its trace.
"""

import logging
from typing import Dict, List, Sequence

import numpy as np
import opt_einsum as oe

from simplexnet.bits import bit_matrix, local_index
from simplexnet.errors import EmptyNetworkError, SimplexError
from simplexnet.lattice.base_lattice import BaseLattice, Region
from simplexnet.limits import MAX_REGION_SITES, check_cap
from simplexnet.network.diagonal_contractor import simplex_product
from simplexnet.network.spec import NetworkSpec
from simplexnet.simplex.states import SimplexState
from simplexnet.spectral.density import ReducedDensity, entropy

logger = logging.getLogger("simplexnet")


class RegionDensityPlan:
    """Precomputed contraction of one region on one lattice, reusable for any simplex values."""

    def __init__(self, lattice: BaseLattice, region: Region, max_region_sites: int = MAX_REGION_SITES):
        check_cap("Region", region.size, max_region_sites)
        self.lattice = lattice
        self.region = region
        inside = region.site_set
        simplices = lattice.simplices

        self.inner = [t for t, sites in enumerate(simplices) if set(sites) <= inside]
        self.outer = [t for t, sites in enumerate(simplices) if not set(sites) <= inside]
        self.boundary = sorted({s for t in self.outer for s in simplices[t] if s in inside})
        self.positions: Dict[int, int] = {s: p for p, s in enumerate(region.sites)}

        symbols: Dict[tuple, str] = {}

        def symbol(key: tuple) -> str:
            if key not in symbols:
                symbols[key] = oe.get_symbol(len(symbols))
            return symbols[key]

        kets: List[str] = []
        bras: List[str] = []
        for t in self.outer:
            kets.append("".join(symbol(("ket", s)) if s in inside else symbol(("env", s)) for s in simplices[t]))
            bras.append("".join(symbol(("bra", s)) if s in inside else symbol(("env", s)) for s in simplices[t]))
        output = "".join(symbol(("ket", s)) for s in self.boundary) + \
            "".join(symbol(("bra", s)) for s in self.boundary)

        self.expression = None
        if self.outer:
            equation = ",".join(kets + bras) + "->" + output
            shapes = [(2,) * len(simplices[t]) for t in self.outer] * 2
            self.expression = oe.contract_expression(equation, *shapes)

        n_a = region.size
        configurations = np.arange(2 ** n_a, dtype=np.int64)
        if self.boundary:
            columns = [self.positions[s] for s in self.boundary]
            self._boundary_index = local_index(bit_matrix(configurations, n_a, columns))
        else:
            self._boundary_index = np.zeros(2 ** n_a, dtype=np.int64)
        self._configurations = configurations
        logger.debug("Region plan: %d sites, %d inner and %d outer simplices, %d boundary sites",
                     n_a, len(self.inner), len(self.outer), len(self.boundary))

    def environment(self, simplices: Sequence[SimplexState]) -> np.ndarray:
        """K as a 2^m x 2^m matrix over the boundary region sites."""
        if self.expression is None:
            return np.ones((1, 1), dtype=complex)
        kets = [np.asarray(simplices[t].tensor()) for t in self.outer]
        bras = [np.conj(k) for k in kets]
        dim = 2 ** len(self.boundary)
        return np.asarray(self.expression(*kets, *bras)).reshape(dim, dim)

    def density(self, simplices: Sequence[SimplexState]) -> ReducedDensity:
        simplices = tuple(simplices)
        if len(simplices) != len(self.lattice.simplices):
            raise SimplexError(f"Expected {len(self.lattice.simplices)} simplices, got {len(simplices)}")

        inner = [(self.lattice.simplices[t], simplices[t].amplitudes) for t in self.inner]
        factor = simplex_product(inner, self.region.size, self._configurations, self.positions)
        environment = self.environment(simplices)
        index = self._boundary_index
        rho = np.outer(factor, factor.conj()) * environment[np.ix_(index, index)]

        trace = float(np.trace(rho).real)
        if not trace > 0:
            raise EmptyNetworkError("All contracted amplitudes vanish; the simplices are inconsistent")
        rho = rho / trace
        return ReducedDensity(self.region, (rho + rho.conj().T) / 2)

    def entropy(self, simplices: Sequence[SimplexState]) -> float:
        return entropy(self.density(simplices))


def region_density(spec: NetworkSpec, region: Region, max_region_sites: int = MAX_REGION_SITES) -> ReducedDensity:
    return RegionDensityPlan(spec.lattice, region, max_region_sites).density(spec.simplex_assignment)
