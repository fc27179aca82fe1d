"""Outward entangling power: entropy of a triangular core for each simplex choice."""

import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import pandas as pd

from simplexnet.errors import LatticeError
from simplexnet.lattice.triangular import build_centered_region, build_triangular_patch, triangular_core_region
from simplexnet.network.region_density import RegionDensityPlan
from simplexnet.simplex.catalog import TABLE1_REFERENCE, TABLE1_REGION_SIZES, TABLE1_SIMPLICES, get_simplex

logger = logging.getLogger("simplexnet")

PLACEMENTS = {"apex": triangular_core_region, "centered": build_centered_region}


class Table1Row(NamedTuple):
    side: int
    n_sites: int
    simplex: str
    core_rows: int
    n_a: int
    boundary: int
    entropy: float
    reference: Optional[float]

    @property
    def residual(self) -> Optional[float]:
        return None if self.reference is None else abs(self.entropy - self.reference)


def reference_entropy(simplex: str, n_a: int) -> Optional[float]:
    if simplex not in TABLE1_REFERENCE or n_a not in TABLE1_REGION_SIZES:
        return None
    return TABLE1_REFERENCE[simplex][TABLE1_REGION_SIZES.index(n_a)]


def run_table1(sides: Sequence[int], core_rows: Sequence[int] = (2, 3, 4),
               simplices: Sequence[str] = TABLE1_SIMPLICES, placement: str = "apex") -> List[Table1Row]:
    if placement not in PLACEMENTS:
        raise ValueError(f"Unsupported region placement: {placement}")

    rows = []
    for side in sides:
        patch = build_triangular_patch(side)
        for k in core_rows:
            try:
                region = PLACEMENTS[placement](patch, k)
            except LatticeError as e:
                logger.warning("Skipping core of %d rows on side %d: %s", k, side, e)
                continue
            plan = RegionDensityPlan(patch, region)
            for label in simplices:
                simplex = get_simplex(label)
                entropy = plan.entropy([simplex] * len(patch.simplices))
                row = Table1Row(side, patch.n_sites, label, k, region.size, region.boundary_size,
                                entropy, reference_entropy(label, region.size))
                logger.info("side=%d n=%d %s n_A=%d S=%.4f", side, patch.n_sites, label, region.size, entropy)
                rows.append(row)
    return rows


def best_matching_sides(rows: Sequence[Table1Row]) -> Dict[str, Tuple[int, float]]:
    """Per simplex, the side whose largest residual against the reference row is smallest."""
    worst: Dict[str, Dict[int, float]] = {}
    for row in rows:
        if row.residual is None:
            continue
        per_side = worst.setdefault(row.simplex, {})
        per_side[row.side] = max(per_side.get(row.side, 0.0), row.residual)
    return {label: min(per_side.items(), key=lambda item: (item[1], item[0])) for label, per_side in worst.items()}


def table1_frame(rows: Sequence[Table1Row]) -> pd.DataFrame:
    frame = pd.DataFrame([row._asdict() for row in rows],
                         columns=list(Table1Row._fields))
    frame["residual"] = [row.residual for row in rows]
    return frame
