"""Entropy of a triangular core as the W / W-bar weight of the simplex is varied."""

import logging
from typing import List, NamedTuple

import numpy as np
import pandas as pd

from simplexnet.errors import EmptyNetworkError
from simplexnet.lattice.triangular import build_triangular_patch, triangular_core_region
from simplexnet.network.region_density import RegionDensityPlan
from simplexnet.simplex.states import mix, w_state, wbar_state

logger = logging.getLogger("simplexnet")


class SweepPoint(NamedTuple):
    theta: float
    weight_w: float
    weight_wbar: float
    entropy: float


def run_weight_sweep(side: int = 4, core_rows: int = 3, points: int = 11) -> List[SweepPoint]:
    """mix(W: cos t, W-bar: sin t) on every up-triangle for t evenly spaced over [0, pi/2]."""
    if points < 2:
        raise ValueError(f"A sweep needs at least 2 points, got {points}")
    patch = build_triangular_patch(side)
    plan = RegionDensityPlan(patch, triangular_core_region(patch, core_rows))
    w, wbar = w_state(), wbar_state()

    sweep = []
    for theta in np.linspace(0.0, np.pi / 2, points):
        weights = (float(np.cos(theta)), float(np.sin(theta)))
        simplex = mix([(w, weights[0]), (wbar, weights[1])], label="w+wbar")
        try:
            value = plan.entropy([simplex] * len(patch.simplices))
        except EmptyNetworkError:
            value = 0.0
        sweep.append(SweepPoint(float(theta), weights[0], weights[1], value))
        logger.debug("theta=%.4f S=%.6f", theta, value)
    logger.info("Weight sweep on side %d, %d core rows: %d points", side, core_rows, points)
    return sweep


def sweep_frame(points: List[SweepPoint]) -> pd.DataFrame:
    return pd.DataFrame(points, columns=list(SweepPoint._fields))
