"""Machine-readable provenance headers for experiment outputs."""

from typing import Dict, List

import numpy as np
import opt_einsum
import scipy

import simplexnet
from simplexnet.harness.config import ExperimentConfig


def provenance_header(config: ExperimentConfig) -> Dict[str, str]:
    return {
        "experiment": config.experiment,
        "config_hash": config.config_hash(),
        "simplexnet": simplexnet.__version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "opt_einsum": opt_einsum.__version__,
    }


def header_lines(provenance: Dict[str, str]) -> List[str]:
    return [f"# {key}: {value}" for key, value in provenance.items()]
