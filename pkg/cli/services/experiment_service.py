"""Experiment runs and their persistence."""

import logging
from datetime import datetime
from typing import Any, Dict, Optional

from simplexnet.harness.config import ExperimentConfig
from simplexnet.harness.eq4 import LATTICE_NAME
from simplexnet.harness.runner import ExperimentOutcome, run_experiment
from simplexnet.store.base_storage import BaseStorage

logger = logging.getLogger("simplexnet")


def build_experiment_config(experiment: str, **overrides: Any) -> ExperimentConfig:
    """Config from command-line values; options left unset keep their defaults."""
    values = {key: value for key, value in overrides.items() if value is not None}
    return ExperimentConfig(experiment=experiment, **values)


def make_run_id(config: ExperimentConfig, created_at: datetime) -> str:
    return f"{config.experiment}-{config.config_hash()[:12]}-{created_at:%Y%m%dT%H%M%S%f}"


def store_outcome(outcome: ExperimentOutcome, storage: BaseStorage) -> str:
    created_at = datetime.now()
    run_id = make_run_id(outcome.config, created_at)
    storage.save_run({
        "run_id": run_id,
        "experiment": outcome.config.experiment,
        "config_hash": outcome.provenance["config_hash"],
        "created_at": created_at,
        "provenance": outcome.provenance,
    })

    experiment = outcome.config.experiment
    if experiment == "table1":
        storage.save_table1_rows(run_id, [row._asdict() for row in outcome.result])
    elif experiment == "scan4":
        storage.save_scan_evaluations(run_id, [
            {"step": e.step, **{f"a{k}": c for k, c in enumerate(e.coeffs)}, "entropy": e.entropy}
            for e in outcome.result.trace
        ])
    elif experiment == "eq4":
        storage.save_ground_manifold(run_id, {
            "lattice": LATTICE_NAME,
            "n_sites": outcome.result.small_field_state.n_qubits,
            "degeneracy": len(outcome.result.manifold),
            "energy": float(outcome.result.manifold_energy),
        })
    elif experiment == "aniso":
        for case in outcome.result.cases:
            storage.save_ground_manifold(run_id, {
                "lattice": f"anisotropic-{case.name}",
                "n_sites": case.n_sites,
                "degeneracy": case.degeneracy,
                "energy": case.energy,
            })
    logger.info("Stored %s run %s", experiment, run_id)
    return run_id


def run_and_store(config: ExperimentConfig, storage: Optional[BaseStorage] = None) -> ExperimentOutcome:
    outcome = run_experiment(config)
    if storage is not None:
        store_outcome(outcome, storage)
    return outcome


def outcome_summary(outcome: ExperimentOutcome) -> Dict[str, Any]:
    """Short key facts for the terminal summary."""
    result = outcome.result
    experiment = outcome.config.experiment
    if experiment == "scan4":
        return {
            "best_entropy": result.best_entropy,
            "reference_entropy": result.reference_entropy,
            "gauge_residual": result.gauge_residual,
            "maximizers": len(result.maximizers),
            "maximizer_residuals": [round(m.gauge_residual, 4) for m in result.maximizers],
            "converged": result.converged,
            "evaluations": len(result.trace),
        }
    if experiment == "eq4":
        return {
            "classes": len(result.classes),
            "overlap": result.overlap,
            "manifold_size": len(result.manifold),
        }
    if experiment == "aniso":
        return {case.name: case.matches_prediction for case in result.cases}
    return {"rows": len(result)}
