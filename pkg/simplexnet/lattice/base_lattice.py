import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
import numpy as np

from simplexnet.errors import RegionError

logger = logging.getLogger("simplexnet")

Edge = Tuple[int, int]


def normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


def simplex_edges(simplex: Tuple[int, ...]) -> List[Edge]:
    """All site pairs of a triangle."""
    return [normalize_edge(simplex[a], simplex[b])
            for a in range(len(simplex)) for b in range(a + 1, len(simplex))]


class BaseLattice(ABC):
    """Sites covered by simplices; each simplex carries one ancillary state."""

    n_sites: int
    edges: Tuple[Edge, ...]
    kind: str

    @property
    @abstractmethod
    def simplices(self) -> Tuple[Tuple[int, ...], ...]:
        """Site tuples, one per ancillary simplex, in leg order."""
        pass

    def site_degrees(self) -> np.ndarray:
        degrees = np.zeros(self.n_sites, dtype=np.int64)
        for simplex in self.simplices:
            degrees[list(simplex)] += 1
        return degrees

    def incident_simplices(self) -> List[List[Tuple[int, int]]]:
        """Per site, the (simplex index, leg position) pairs touching it."""
        incident: List[List[Tuple[int, int]]] = [[] for _ in range(self.n_sites)]
        for t, simplex in enumerate(self.simplices):
            for leg, site in enumerate(simplex):
                incident[site].append((t, leg))
        return incident

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_sites))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_graph())

    def region(self, sites: Iterable[int]) -> "Region":
        return Region.from_sites(self, sites)


@dataclass(frozen=True)
class Region:
    """A nonempty proper subset of a lattice's sites."""

    lattice: BaseLattice = field(repr=False, compare=False)
    sites: Tuple[int, ...]

    def __post_init__(self):
        n = self.lattice.n_sites
        sites = tuple(sorted(set(int(s) for s in self.sites)))
        if not sites:
            raise RegionError("Region must be nonempty")
        if sites[0] < 0 or sites[-1] >= n:
            raise RegionError(f"Region sites must lie in 0..{n - 1}")
        if len(sites) == n:
            raise RegionError("Region must be a proper subset of the lattice")
        object.__setattr__(self, "sites", sites)

    @classmethod
    def from_sites(cls, lattice: BaseLattice, sites: Iterable[int]) -> "Region":
        return cls(lattice=lattice, sites=tuple(sites))

    @property
    def size(self) -> int:
        return len(self.sites)

    @property
    def site_set(self) -> FrozenSet[int]:
        return frozenset(self.sites)

    def complement(self) -> "Region":
        inside = self.site_set
        return Region(self.lattice, tuple(s for s in range(self.lattice.n_sites) if s not in inside))

    def crossing_edges(self) -> List[Edge]:
        inside = self.site_set
        return [e for e in self.lattice.edges if (e[0] in inside) != (e[1] in inside)]

    def boundary_sites(self) -> Tuple[int, ...]:
        """Region sites sharing an edge with the complement."""
        inside = self.site_set
        touching = {s for e in self.crossing_edges() for s in e if s in inside}
        return tuple(sorted(touching))

    @property
    def boundary_size(self) -> int:
        return len(self.boundary_sites())

    def edge_cut(self) -> int:
        return len(self.crossing_edges())

    def describe(self) -> Dict[str, int]:
        return {"n_a": self.size, "boundary": self.boundary_size, "edge_cut": self.edge_cut()}
