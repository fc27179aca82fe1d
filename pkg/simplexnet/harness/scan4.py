"""Search over exchange-symmetric 4-qubit simplices for the most entangled inner square."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar

from simplexnet.errors import EmptyNetworkError
from simplexnet.harness.config import ExperimentConfig
from simplexnet.lattice.square import SquareNetworkGraph, build_square_network
from simplexnet.network.region_density import RegionDensityPlan
from simplexnet.simplex.catalog import SYM4_OPTIMUM
from simplexnet.simplex.states import FOUR_QUBIT_MULTIPLICITY, SymmetricFourQubit, symmetric_four

logger = logging.getLogger("simplexnet")

Coefficients = Tuple[float, float, float, float, float]

TARGET: Coefficients = SymmetricFourQubit(SYM4_OPTIMUM).coeffs
PATTERN_TOLERANCE = 0.01
MAXIMIZER_WINDOW = 1e-6
ODD_WEIGHTS = np.array([1.0, -1.0, 1.0, -1.0, 1.0])


def unit_from_angles(angles: Sequence[float]) -> np.ndarray:
    """Hyperspherical coordinates: three polar angles in [0, pi] and one azimuth."""
    unit = np.ones(5)
    for axis, angle in enumerate(angles):
        unit[axis] *= np.cos(angle)
        unit[axis + 1:] *= np.sin(angle)
    return unit


def angles_from_unit(unit: Sequence[float]) -> np.ndarray:
    unit = np.asarray(unit, dtype=float)
    angles = np.zeros(4)
    for axis in range(3):
        angles[axis] = np.arctan2(np.linalg.norm(unit[axis + 1:]), unit[axis])
    angles[3] = np.arctan2(unit[4], unit[3]) % (2 * np.pi)
    return angles


def coefficients_from_unit(unit: Sequence[float]) -> Coefficients:
    return SymmetricFourQubit(tuple(np.asarray(unit) / np.sqrt(FOUR_QUBIT_MULTIPLICITY))).coeffs


def unit_from_coefficients(coeffs: Sequence[float]) -> np.ndarray:
    unit = np.asarray(coeffs, dtype=float) * np.sqrt(FOUR_QUBIT_MULTIPLICITY)
    return unit / np.linalg.norm(unit)


def angle_grid(resolution: int) -> List[Coefficients]:
    """Distinct normalized coefficient vectors on a regular angle grid."""
    polar = np.linspace(0.0, np.pi, resolution)
    azimuth = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    seen = set()
    points = []
    for a in polar:
        for b in polar:
            for c in polar:
                for d in azimuth:
                    unit = unit_from_angles((a, b, c, d))
                    key = tuple(np.round(unit, 12) + 0.0)
                    if key in seen:
                        continue
                    seen.add(key)
                    points.append(coefficients_from_unit(unit))
    return points


class InnerSquareEntropy:
    """Entropy of the inner square when every plaquette carries the same symmetric simplex."""

    def __init__(self, network: Optional[SquareNetworkGraph] = None):
        self.network = network or build_square_network()
        self.plan = RegionDensityPlan(self.network, self.network.inner_region())

    def __call__(self, coeffs: Sequence[float]) -> float:
        simplex = symmetric_four(coeffs)
        try:
            return self.plan.entropy([simplex] * len(self.network.simplices))
        except EmptyNetworkError:
            return 0.0


def gauge_images(coeffs: Sequence[float]) -> List[np.ndarray]:
    """Global sign, bit-flip (weight reversal) and odd-weight sign changes leave the entropy unchanged."""
    coeffs = np.asarray(coeffs, dtype=float)
    images = []
    for flipped in (coeffs, coeffs[::-1]):
        for signed in (flipped, flipped * ODD_WEIGHTS):
            images.extend((signed, -signed))
    return images


def gauge_residual(coeffs: Sequence[float], target: Sequence[float] = TARGET) -> Tuple[float, Coefficients]:
    target = np.asarray(target, dtype=float)
    best = min(gauge_images(coeffs), key=lambda image: (float(np.max(np.abs(image - target))), tuple(image)))
    return float(np.max(np.abs(best - target))), tuple(float(c) for c in best)


class ScanEvaluation(NamedTuple):
    step: int
    coeffs: Coefficients
    entropy: float


class Maximizer(NamedTuple):
    coeffs: Coefficients
    entropy: float
    gauge_residual: float
    gauged_coeffs: Coefficients


def distinct_maximizers(trace: Sequence[ScanEvaluation], window: float = MAXIMIZER_WINDOW,
                        separation: float = PATTERN_TOLERANCE) -> Tuple[Maximizer, ...]:
    """Evaluations within ``window`` of the top entropy, one per gauge class, best first."""
    if not trace:
        return ()
    top = max(e.entropy for e in trace)
    candidates = sorted((e for e in trace if e.entropy >= top - window), key=lambda e: (-e.entropy, e.step))
    found: List[Maximizer] = []
    for candidate in candidates:
        if any(gauge_residual(candidate.coeffs, m.coeffs)[0] <= separation for m in found):
            continue
        residual, gauged = gauge_residual(candidate.coeffs)
        found.append(Maximizer(candidate.coeffs, candidate.entropy, residual, gauged))
    return tuple(found)


@dataclass(frozen=True)
class ScanResult:
    best_coeffs: Coefficients
    best_entropy: float
    trace: Tuple[ScanEvaluation, ...]
    converged: bool
    reference_entropy: float
    gauge_residual: float
    gauged_coeffs: Coefficients
    maximizers: Tuple[Maximizer, ...] = ()

    def __post_init__(self):
        if self.trace and self.best_entropy < max(e.entropy for e in self.trace) - 1e-12:
            raise ValueError("Best entropy must be the maximum over the trace")

    def matches_pattern(self, tolerance: float = PATTERN_TOLERANCE) -> bool:
        return self.gauge_residual <= tolerance

    @property
    def degenerate(self) -> bool:
        return len(self.maximizers) > 1


class _Recorder:
    """Evaluates coefficients and appends every evaluation to the trace in call order."""

    def __init__(self, evaluator: Callable[[Sequence[float]], float]):
        self.evaluator = evaluator
        self.trace: List[ScanEvaluation] = []

    def record(self, coeffs: Coefficients, entropy: float) -> float:
        self.trace.append(ScanEvaluation(len(self.trace), coeffs, float(entropy)))
        return float(entropy)

    def __call__(self, coeffs: Sequence[float]) -> float:
        coeffs = SymmetricFourQubit(tuple(coeffs)).coeffs
        return self.record(coeffs, self.evaluator(coeffs))

    def best(self) -> ScanEvaluation:
        return min(self.trace, key=lambda e: (-round(e.entropy, 12), e.step))


def refine(start: Sequence[float], evaluate: _Recorder, step: float,
           max_iterations: int, tolerance: float) -> Tuple[Coefficients, float, bool]:
    """Coordinate-wise golden-section passes over the angles until a pass gains less than ``tolerance``."""
    angles = angles_from_unit(unit_from_coefficients(start))
    current = evaluate(coefficients_from_unit(unit_from_angles(angles)))

    for iteration in range(max_iterations):
        previous = current
        for axis in range(len(angles)):
            def objective(value: float) -> float:
                trial = angles.copy()
                trial[axis] = value
                return -evaluate(coefficients_from_unit(unit_from_angles(trial)))

            try:
                result = minimize_scalar(objective, bracket=(angles[axis], angles[axis] + step),
                                         method="golden", options={"xtol": 1e-6})
            except (RuntimeError, ValueError) as e:
                logger.debug("Golden search on angle %d skipped: %s", axis, e)
                continue
            if -result.fun > current:
                angles[axis] = result.x
                current = -result.fun
        logger.debug("Refinement pass %d: S=%.8f", iteration, current)
        if current - previous < tolerance:
            return coefficients_from_unit(unit_from_angles(angles)), current, True
    return coefficients_from_unit(unit_from_angles(angles)), current, False


def run_scan4(config: ExperimentConfig,
              evaluator: Optional[Callable[[Sequence[float]], float]] = None) -> ScanResult:
    """Grid search, then refinement from the grid best and random restarts.

    The symmetric optimum pattern is evaluated once as a reference and never enters the
    trace or the starts.
    """
    evaluate = _Recorder(evaluator or InnerSquareEntropy())
    reference = float(evaluate.evaluator(TARGET))

    grid = angle_grid(config.grid)
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            values = list(pool.map(evaluate.evaluator, grid))
        for coeffs, value in zip(grid, values):
            evaluate.record(coeffs, value)
    else:
        for coeffs in grid:
            evaluate(coeffs)
    grid_best = evaluate.best()
    logger.info("Grid of %d points: best S=%.6f at %s", len(grid), grid_best.entropy, grid_best.coeffs)

    rng = np.random.default_rng(config.seed)
    starts = [grid_best.coeffs]
    starts += [coefficients_from_unit(v / np.linalg.norm(v)) for v in rng.normal(size=(config.restarts, 5))]

    step = np.pi / (config.grid - 1)
    converged = True
    for start in starts:
        _, value, done = refine(start, evaluate, step, config.max_iterations, config.tolerance)
        converged = converged and done
        logger.debug("Refined start %s to S=%.8f", start, value)
    if not converged:
        logger.warning("Scan refinement hit the iteration cap of %d before converging", config.max_iterations)

    best = evaluate.best()
    residual, gauged = gauge_residual(best.coeffs)
    maximizers = distinct_maximizers(evaluate.trace)
    for m in maximizers:
        logger.info("Maximizer S=%.6f at %s, residual %.4f to the symmetric optimum pattern",
                    m.entropy, m.coeffs, m.gauge_residual)
    if len(maximizers) > 1:
        logger.warning("%d gauge-inequivalent maximizers within %g of the best entropy", len(maximizers), MAXIMIZER_WINDOW)
    if residual > PATTERN_TOLERANCE:
        logger.warning("Best coefficients %s differ from the symmetric optimum pattern by %.4f", best.coeffs, residual)
    logger.info("Scan best S=%.6f after %d evaluations (reference S=%.6f)", best.entropy, len(evaluate.trace), reference)
    return ScanResult(
        best_coeffs=best.coeffs,
        best_entropy=best.entropy,
        trace=tuple(evaluate.trace),
        converged=converged,
        reference_entropy=reference,
        gauge_residual=residual,
        gauged_coeffs=gauged,
        maximizers=maximizers,
    )


def scan_frame(result: ScanResult) -> pd.DataFrame:
    return pd.DataFrame(
        [(e.step, *e.coeffs, e.entropy) for e in result.trace],
        columns=["step", "a0", "a1", "a2", "a3", "a4", "entropy"],
    )
