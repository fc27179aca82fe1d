"""Computation and experiment services behind the commands."""

from . import compute_service
from . import experiment_service

__all__ = [
    'compute_service',
    'experiment_service',
]
