"""Dispatch from an ExperimentConfig to the matching experiment."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import pandas as pd

from simplexnet.harness.config import ExperimentConfig
from simplexnet.harness.provenance import provenance_header

logger = logging.getLogger("simplexnet")


@dataclass(frozen=True, eq=False)
class ExperimentOutcome:
    config: ExperimentConfig
    provenance: Dict[str, str]
    result: Any
    frame: Optional[pd.DataFrame] = None
    text: Optional[str] = None


def run_experiment(config: ExperimentConfig) -> ExperimentOutcome:
    provenance = provenance_header(config)
    logger.info("Running %s (config %s)", config.experiment, provenance["config_hash"][:12])

    if config.experiment == "table1":
        from simplexnet.harness.table1 import best_matching_sides, run_table1, table1_frame
        rows = run_table1(config.sides, config.core_rows, config.simplices, config.placement)
        for label, (side, residual) in best_matching_sides(rows).items():
            logger.info("%s: closest side %d, largest residual %.4f", label, side, residual)
        return ExperimentOutcome(config, provenance, rows, frame=table1_frame(rows))
    elif config.experiment == "eq4":
        from simplexnet.harness.eq4 import run_eq4
        report = run_eq4(config.field, config.class_separation)
        return ExperimentOutcome(config, provenance, report, text=report.to_text())
    elif config.experiment == "scan4":
        from simplexnet.harness.scan4 import run_scan4, scan_frame
        result = run_scan4(config)
        return ExperimentOutcome(config, provenance, result, frame=scan_frame(result))
    elif config.experiment == "aniso":
        from simplexnet.harness.anisotropy import run_anisotropy
        report = run_anisotropy()
        return ExperimentOutcome(config, provenance, report, text=report.to_text())
    elif config.experiment == "sweep":
        from simplexnet.harness.sweep import run_weight_sweep, sweep_frame
        points = run_weight_sweep(config.sides[0], config.core_rows[0], config.points)
        return ExperimentOutcome(config, provenance, points, frame=sweep_frame(points))
    else:
        raise ValueError(f"Unsupported experiment: {config.experiment}")
