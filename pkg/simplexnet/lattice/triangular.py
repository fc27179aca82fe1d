"""Triangular lattices built from up-triangles.

Patch sites are numbered row-major from the apex: site (row, col) with
0 <= col <= row has index row * (row + 1) / 2 + col. The up-triangle anchored at
(row, col) is (apex, base-left, base-right) = ((row, col), (row+1, col), (row+1, col+1)).
Base edges are horizontal, the other two are diagonal.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

from simplexnet.errors import LatticeError
from simplexnet.lattice.base_lattice import BaseLattice, Edge, Region, normalize_edge, simplex_edges

logger = logging.getLogger("simplexnet")

LATTICE_KINDS = ("triangular-patch", "square-network", "explicit")


@dataclass(frozen=True)
class LatticeGraph(BaseLattice):
    n_sites: int
    up_triangles: Tuple[Tuple[int, int, int], ...]
    edges: Tuple[Edge, ...]
    kind: str = "explicit"
    coordinates: Optional[Tuple[Tuple[int, int], ...]] = None

    def __post_init__(self):
        if self.n_sites < 1:
            raise LatticeError("Lattice needs at least one site")
        if self.kind not in LATTICE_KINDS:
            raise LatticeError(f"Unknown lattice kind: {self.kind}")

        seen = set()
        for triangle in self.up_triangles:
            if len(triangle) != 3 or len(set(triangle)) != 3:
                raise LatticeError(f"Triangle {triangle} must have three distinct sites")
            if min(triangle) < 0 or max(triangle) >= self.n_sites:
                raise LatticeError(f"Triangle {triangle} references a site outside 0..{self.n_sites - 1}")
            key = frozenset(triangle)
            if key in seen:
                raise LatticeError(f"Duplicate triangle {triangle}")
            seen.add(key)

        for i, j in self.edges:
            if not 0 <= i < j < self.n_sites:
                raise LatticeError(f"Edge {(i, j)} must be an ordered pair of lattice sites")
        if len(set(self.edges)) != len(self.edges):
            raise LatticeError("Edge list contains duplicates")

        triangle_edges = {e for t in self.up_triangles for e in simplex_edges(t)}
        covered = {s for t in self.up_triangles for s in t}
        if self.kind == "explicit":
            if not triangle_edges <= set(self.edges):
                raise LatticeError("Edge list must contain every triangle edge")
            covered |= {s for e in self.edges for s in e}
        elif set(self.edges) != triangle_edges:
            raise LatticeError("Edges must equal the union of up-triangle edges")
        if len(covered) != self.n_sites:
            missing = sorted(set(range(self.n_sites)) - covered)
            raise LatticeError(f"Sites {missing} belong to no up-triangle")

        if self.coordinates is not None and len(self.coordinates) != self.n_sites:
            raise LatticeError("Coordinates must list one (row, col) pair per site")

    @classmethod
    def from_triangles(cls, n_sites: int, triangles: Iterable[Sequence[int]], kind: str = "explicit",
                       extra_edges: Iterable[Sequence[int]] = (),
                       coordinates: Optional[Sequence[Tuple[int, int]]] = None) -> "LatticeGraph":
        """Build a lattice deriving the edge set from the triangles (plus bare edges)."""
        triangles = tuple(tuple(int(s) for s in t) for t in triangles)
        edges = set()
        for triangle in triangles:
            if len(set(triangle)) == 3:
                edges.update(simplex_edges(triangle))
        for i, j in extra_edges:
            if i == j:
                raise LatticeError(f"Edge ({i}, {j}) is a self-loop")
            edges.add(normalize_edge(int(i), int(j)))
        coords = tuple(tuple(c) for c in coordinates) if coordinates is not None else None
        return cls(n_sites=n_sites, up_triangles=triangles, edges=tuple(sorted(edges)),
                   kind=kind, coordinates=coords)

    @property
    def simplices(self) -> Tuple[Tuple[int, ...], ...]:
        return self.up_triangles

    @cached_property
    def edge_multiplicity(self) -> Dict[Edge, int]:
        """Number of up-triangles containing each edge; bare edges count once."""
        counts = {e: 0 for e in self.edges}
        for triangle in self.up_triangles:
            for e in simplex_edges(triangle):
                counts[e] += 1
        return {e: max(c, 1) for e, c in counts.items()}

    def edges_disjoint(self) -> bool:
        return all(c == 1 for c in self.edge_multiplicity.values())

    @property
    def side(self) -> Optional[int]:
        """Patch side for generated triangular patches, else None."""
        if self.kind != "triangular-patch" or self.coordinates is None:
            return None
        return max(r for r, _ in self.coordinates)


def site_index(row: int, col: int) -> int:
    return row * (row + 1) // 2 + col


def build_six_site() -> LatticeGraph:
    """Six sites, up-triangles {0,1,2}, {2,3,4}, {2,4,5}; edge {2,4} is shared."""
    return LatticeGraph.from_triangles(6, [(0, 1, 2), (2, 3, 4), (2, 4, 5)], kind="triangular-patch")


def build_triangular_patch(side: int) -> LatticeGraph:
    if not isinstance(side, int) or side < 1:
        raise LatticeError(f"Patch side must be a positive integer, got {side!r}")

    coordinates = [(r, c) for r in range(side + 1) for c in range(r + 1)]
    triangles = [
        (site_index(r, c), site_index(r + 1, c), site_index(r + 1, c + 1))
        for r in range(side) for c in range(r + 1)
    ]
    lattice = LatticeGraph.from_triangles(len(coordinates), triangles, kind="triangular-patch",
                                          coordinates=coordinates)
    logger.debug("Built triangular patch side=%d: %d sites, %d up-triangles",
                 side, lattice.n_sites, len(triangles))
    return lattice


def _patch_side(patch: LatticeGraph) -> int:
    side = getattr(patch, "side", None)
    if side is None:
        raise LatticeError("Core regions need a generated triangular patch")
    return side


def _core_sites(apex_row: int, apex_col: int, core_rows: int) -> Tuple[int, ...]:
    return tuple(site_index(apex_row + i, apex_col + j) for i in range(core_rows) for j in range(i + 1))


def _check_core(patch: LatticeGraph, core_rows: int) -> int:
    side = _patch_side(patch)
    if not isinstance(core_rows, int) or core_rows < 1:
        raise LatticeError(f"Core rows must be a positive integer, got {core_rows!r}")
    if core_rows > side:
        raise LatticeError(f"Core of {core_rows} rows does not fit inside a side-{side} patch")
    return side


def triangular_core_region(patch: LatticeGraph, core_rows: int) -> Region:
    """The first ``core_rows`` rows of the patch, n_A = core_rows (core_rows + 1) / 2."""
    _check_core(patch, core_rows)
    return Region(patch, _core_sites(0, 0, core_rows))


def build_centered_region(patch: LatticeGraph, core_rows: int) -> Region:
    """Core triangle with the slack split evenly between the left, right and bottom margins."""
    side = _check_core(patch, core_rows)
    slack = side + 1 - core_rows
    margin = slack // 3
    return Region(patch, _core_sites(2 * margin, margin, core_rows))


def edge_directions(lattice: LatticeGraph) -> Dict[Edge, str]:
    """Label each edge "horizontal" (same row) or "diagonal"."""
    if lattice.coordinates is None:
        raise LatticeError("Edge directions need site coordinates")
    rows = [r for r, _ in lattice.coordinates]
    return {e: "horizontal" if rows[e[0]] == rows[e[1]] else "diagonal" for e in lattice.edges}
