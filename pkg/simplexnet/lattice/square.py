"""Square network of corner-sharing checked plaquettes.

Sites (r, c) of a rows x cols grid are numbered r * cols + c. Plaquette (r, c) has
corners (r, c), (r, c+1), (r+1, c), (r+1, c+1), wrapping at the grid ends, and is
checked iff r + c is even, so every site belongs to exactly two checked
squares. The inner region is checked plaquette (1, 1).
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from simplexnet.errors import LatticeError
from simplexnet.lattice.base_lattice import BaseLattice, Edge, Region, normalize_edge


@dataclass(frozen=True)
class SquareNetworkGraph(BaseLattice):
    n_sites: int
    checked_squares: Tuple[Tuple[int, int, int, int], ...]
    edges: Tuple[Edge, ...]
    inner_sites: Tuple[int, ...]
    rows: int
    cols: int
    kind: str = "square-network"

    def __post_init__(self):
        membership = self.site_membership()
        if np.any(membership != 2):
            bad = np.flatnonzero(membership != 2).tolist()
            raise LatticeError(f"Sites {bad} are not shared by exactly two checked squares")
        if len(self.inner_sites) != 4:
            raise LatticeError("Inner region must hold the four corners of one square")

    @property
    def simplices(self) -> Tuple[Tuple[int, ...], ...]:
        return self.checked_squares

    def site_membership(self) -> np.ndarray:
        counts = np.zeros(self.n_sites, dtype=np.int64)
        for square in self.checked_squares:
            counts[list(square)] += 1
        return counts

    def inner_region(self) -> Region:
        return Region(self, self.inner_sites)


def build_square_network(rows: int = 4, cols: int = 6) -> SquareNetworkGraph:
    if rows < 4 or cols < 4 or rows % 2 or cols % 2:
        raise LatticeError("Square network needs even dimensions of at least 4")

    def site(r: int, c: int) -> int:
        return (r % rows) * cols + (c % cols)

    squares = []
    edges = set()
    for r in range(rows):
        for c in range(cols):
            if (r + c) % 2:
                continue
            a, b, d, e = site(r, c), site(r, c + 1), site(r + 1, c), site(r + 1, c + 1)
            squares.append((a, b, d, e))
            edges.update(normalize_edge(*pair) for pair in ((a, b), (d, e), (a, d), (b, e)))

    inner = (site(1, 1), site(1, 2), site(2, 1), site(2, 2))
    return SquareNetworkGraph(
        n_sites=rows * cols,
        checked_squares=tuple(squares),
        edges=tuple(sorted(edges)),
        inner_sites=tuple(sorted(inner)),
        rows=rows,
        cols=cols,
    )
