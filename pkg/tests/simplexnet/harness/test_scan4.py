"""Tests for the symmetric 4-qubit simplex search."""

import numpy as np
import pytest

from simplexnet.harness import scan4
from simplexnet.harness.config import ExperimentConfig
from simplexnet.harness.scan4 import (
    TARGET, InnerSquareEntropy, ScanEvaluation, ScanResult, angle_grid, angles_from_unit,
    coefficients_from_unit, distinct_maximizers, gauge_images, gauge_residual, run_scan4, scan_frame,
    unit_from_angles, unit_from_coefficients,
)
from simplexnet.simplex.states import FOUR_QUBIT_MULTIPLICITY


def smooth_evaluator(coeffs):
    """Peaked at the target pattern, so refinement has somewhere to go."""
    return 2.0 - float(np.sum((np.asarray(coeffs) - np.asarray(TARGET)) ** 2))


@pytest.fixture
def scan_config():
    """Small scan configuration."""
    return ExperimentConfig(experiment="scan4", grid=3, restarts=1, max_iterations=3, seed=5)


class TestCoordinates:
    """Tests for angle and coefficient conversions."""

    def test_unit_norm(self):
        """Test angles map onto the unit sphere."""
        assert np.linalg.norm(unit_from_angles((0.3, 1.1, 2.0, 4.0))) == pytest.approx(1.0)

    def test_round_trip(self):
        """Test angles recover a unit vector."""
        unit = unit_from_coefficients(TARGET)
        assert np.allclose(unit_from_angles(angles_from_unit(unit)), unit)

    def test_coefficients_normalized(self):
        """Test coefficients are normalized with weight multiplicities."""
        coeffs = np.asarray(coefficients_from_unit(unit_from_angles((0.4, 0.9, 1.3, 2.2))))
        assert np.sum(FOUR_QUBIT_MULTIPLICITY * coeffs ** 2) == pytest.approx(1.0)

    def test_target_round_trip(self):
        """Test the target survives the unit conversion."""
        assert np.allclose(coefficients_from_unit(unit_from_coefficients(TARGET)), TARGET)

    def test_grid_distinct(self):
        """Test grid points are distinct and normalized."""
        grid = angle_grid(3)
        assert len(grid) > 2
        assert len({tuple(np.round(c, 9)) for c in grid}) == len(grid)
        for coeffs in grid:
            assert np.sum(FOUR_QUBIT_MULTIPLICITY * np.asarray(coeffs) ** 2) == pytest.approx(1.0)


class TestGauge:
    """Tests for the entropy-preserving coefficient symmetries."""

    def test_eight_images(self):
        """Test sign, reversal and odd-weight sign images."""
        assert len(gauge_images(TARGET)) == 8

    def test_target_residual(self):
        """Test the target has zero residual."""
        residual, gauged = gauge_residual(TARGET)
        assert residual == pytest.approx(0.0)
        assert np.allclose(gauged, TARGET)

    def test_reversed_target(self):
        """Test the bit-flipped target is recognized."""
        residual, _ = gauge_residual(tuple(reversed(TARGET)))
        assert residual == pytest.approx(0.0)

    def test_negated_odd_weights(self):
        """Test odd-weight sign changes are recognized."""
        residual, _ = gauge_residual(tuple(-np.asarray(TARGET) * np.array([1, -1, 1, -1, 1])))
        assert residual == pytest.approx(0.0)


class TestInnerSquareEntropy:
    """Tests for the inner-square entropy on the square network."""

    @pytest.fixture(scope="class")
    def evaluator(self):
        """Entropy evaluator on the default network."""
        return InnerSquareEntropy()

    def test_product_simplex(self, evaluator):
        """Test all-zeros plaquettes leave the inner square unentangled."""
        assert evaluator((1.0, 0.0, 0.0, 0.0, 0.0)) == pytest.approx(0.0, abs=1e-9)

    def test_ghz_simplex(self, evaluator):
        """Test GHZ plaquettes give one ebit."""
        assert evaluator((1.0, 0.0, 0.0, 0.0, 1.0)) == pytest.approx(1.0, abs=1e-9)

    def test_target_bounded(self, evaluator):
        """Test the target entropy lies within the four-qubit range."""
        assert 0.0 <= evaluator(TARGET) <= 4.0 + 1e-9


class TestRunScan4:
    """Tests for run_scan4 with a cheap evaluator."""

    def test_best_is_trace_maximum(self, scan_config):
        """Test the reported best is the largest evaluation."""
        result = run_scan4(scan_config, evaluator=smooth_evaluator)
        assert result.best_entropy == pytest.approx(max(e.entropy for e in result.trace))

    def test_reference_outside_trace(self, scan_config):
        """Test the target is evaluated as a reference but never recorded."""
        result = run_scan4(scan_config, evaluator=smooth_evaluator)
        assert result.reference_entropy == pytest.approx(2.0)
        assert result.trace[0].step == 0
        assert not any(np.allclose(e.coeffs, TARGET) for e in result.trace[:len(angle_grid(scan_config.grid))])

    def test_starts_exclude_target(self, scan_config, mocker):
        """Test refinement starts come from the grid best and random restarts only."""
        spy = mocker.spy(scan4, "refine")
        run_scan4(scan_config, evaluator=smooth_evaluator)
        starts = [call.args[0] for call in spy.call_args_list]
        assert len(starts) == scan_config.restarts + 1
        assert not any(np.allclose(start, TARGET) for start in starts)

    def test_finds_pattern(self, scan_config):
        """Test refinement from unseeded starts climbs to the peak of a smooth evaluator."""
        config = scan_config.model_copy(update={"restarts": 3, "max_iterations": 50})
        result = run_scan4(config, evaluator=smooth_evaluator)
        assert result.matches_pattern()
        assert result.best_entropy == pytest.approx(2.0, abs=1e-4)

    def test_single_maximizer(self, scan_config):
        """Test a single peak reports one maximizer class."""
        config = scan_config.model_copy(update={"restarts": 3, "max_iterations": 50})
        result = run_scan4(config, evaluator=smooth_evaluator)
        assert len(result.maximizers) == 1
        assert not result.degenerate
        assert result.maximizers[0].entropy == pytest.approx(result.best_entropy)

    def test_deterministic(self, scan_config):
        """Test identical configs give identical traces."""
        first = run_scan4(scan_config, evaluator=smooth_evaluator)
        second = run_scan4(scan_config, evaluator=smooth_evaluator)
        assert first.trace == second.trace
        assert first.best_coeffs == second.best_coeffs

    def test_workers_keep_order(self, scan_config):
        """Test threaded grid evaluation records in grid order."""
        serial = run_scan4(scan_config, evaluator=smooth_evaluator)
        threaded = run_scan4(scan_config.model_copy(update={"workers": 3}), evaluator=smooth_evaluator)
        assert len(serial.trace) == len(threaded.trace)
        for a, b in zip(serial.trace, threaded.trace):
            assert np.allclose(a.coeffs, b.coeffs)
            assert a.entropy == pytest.approx(b.entropy)

    def test_evaluator_calls(self, scan_config, mocker):
        """Test every evaluation goes through the supplied evaluator."""
        evaluator = mocker.Mock(side_effect=smooth_evaluator)
        result = run_scan4(scan_config, evaluator=evaluator)
        assert evaluator.call_count == len(result.trace) + 1

    def test_frame(self, scan_config):
        """Test the trace frame columns."""
        frame = scan_frame(run_scan4(scan_config, evaluator=smooth_evaluator))
        assert list(frame.columns) == ["step", "a0", "a1", "a2", "a3", "a4", "entropy"]
        assert frame["step"].tolist() == list(range(len(frame)))


class TestScanResult:
    """Tests for ScanResult validation."""

    def test_best_must_be_maximum(self):
        """Test a best entropy below the trace maximum is rejected."""
        trace = (ScanEvaluation(0, TARGET, 1.0), ScanEvaluation(1, TARGET, 2.0))
        with pytest.raises(ValueError):
            ScanResult(TARGET, 1.0, trace, True, 1.0, 0.0, TARGET)


class TestDistinctMaximizers:
    """Tests for distinct_maximizers."""

    OTHER = (-0.25, 0.25, 0.25, -0.25, -0.25)

    def test_gauge_images_merge(self):
        """Test gauge images of one maximizer count once."""
        trace = (ScanEvaluation(0, TARGET, 4.0), ScanEvaluation(1, tuple(reversed(TARGET)), 4.0 - 1e-9))
        maximizers = distinct_maximizers(trace)
        assert len(maximizers) == 1
        assert maximizers[0].coeffs == TARGET
        assert maximizers[0].gauge_residual == pytest.approx(0.0)

    def test_inequivalent_maximizers(self):
        """Test inequivalent coefficient vectors at the same entropy are both reported."""
        trace = (
            ScanEvaluation(0, (1.0, 0.0, 0.0, 0.0, 0.0), 0.0),
            ScanEvaluation(1, self.OTHER, 4.0),
            ScanEvaluation(2, TARGET, 4.0),
        )
        maximizers = distinct_maximizers(trace)
        assert [m.coeffs for m in maximizers] == [self.OTHER, TARGET]
        assert maximizers[0].gauge_residual == pytest.approx(0.5)
        assert maximizers[1].gauge_residual == pytest.approx(0.0)

    def test_window(self):
        """Test evaluations more than the window below the best are left out."""
        trace = (ScanEvaluation(0, TARGET, 4.0), ScanEvaluation(1, self.OTHER, 4.0 - 1e-3))
        assert [m.coeffs for m in distinct_maximizers(trace)] == [TARGET]

    def test_empty(self):
        """Test an empty trace has no maximizers."""
        assert distinct_maximizers(()) == ()

    def test_degenerate_result(self):
        """Test a result with two maximizer classes is degenerate."""
        trace = (ScanEvaluation(0, TARGET, 4.0), ScanEvaluation(1, self.OTHER, 4.0))
        result = ScanResult(TARGET, 4.0, trace, True, 4.0, 0.0, TARGET, distinct_maximizers(trace))
        assert result.degenerate
