"""Tests for ground-manifold enumeration and W-structure checks."""

import math

import pytest

from simplexnet.errors import CapExceededError, EmptyManifoldError, StateError
from simplexnet.frustration.manifold import (
    GroundManifold, enumerate_ground, equal_superposition, is_frustrated, verify_w_structure,
    wannier_estimate,
)
from simplexnet.spectral.couplings import anisotropic_couplings
from simplexnet.spectral.state import PureState


class TestEnumerateGround:
    """Tests for enumerate_ground."""

    def test_six_site(self, six_site, six_site_triangle_couplings):
        """Test degeneracy and energy of the shared-edge lattice with per-triangle bonds."""
        manifold = enumerate_ground(six_site, six_site_triangle_couplings)
        assert manifold.degeneracy == 30
        assert manifold.energy == -3

    def test_six_site_plain_edges(self, six_site):
        """Test plain edge couplings favour equal spins on the shared edge."""
        manifold = enumerate_ground(six_site)
        assert manifold.degeneracy == 6
        assert manifold.energy == -4
        assert all(c[2] == c[4] and c[3] != c[2] and c[5] != c[2] for c in manifold.configurations)

    def test_listed_states_outside_manifold(self, six_site, six_site_triangle_couplings):
        """Test two configurations with a monochromatic triangle are excluded."""
        manifold = enumerate_ground(six_site, six_site_triangle_couplings)
        assert "010001" not in manifold
        assert "001110" not in manifold
        assert "100110" in manifold

    @pytest.mark.parametrize("side,degeneracy", [(1, 6), (2, 26)])
    def test_patches(self, side, degeneracy, request):
        """Test degeneracies of small patches."""
        patch = request.getfixturevalue(f"patch{side}")
        manifold = enumerate_ground(patch)
        assert manifold.degeneracy == degeneracy
        assert manifold.energy == -side * (side + 1) // 2

    @pytest.mark.parametrize("side", [1, 2, 3, 4])
    def test_one_frustrated_edge_per_triangle(self, side, request):
        """Test edge-disjoint patches reach E0 = -|T*| with exactly one equal-spin pair per triangle."""
        patch = request.getfixturevalue(f"patch{side}")
        assert patch.edges_disjoint()
        manifold = enumerate_ground(patch)
        assert manifold.energy == -len(patch.simplices)
        for configuration in manifold.configurations:
            for triangle in patch.simplices:
                pairs = [(a, b) for k, a in enumerate(triangle) for b in triangle[k + 1:]]
                assert sum(configuration[a] == configuration[b] for a, b in pairs) == 1

    def test_sector(self, six_site, six_site_triangle_couplings):
        """Test fixing site 0 keeps half of the spin-flip symmetric manifold."""
        manifold = enumerate_ground(six_site, six_site_triangle_couplings, sector=0)
        assert manifold.degeneracy == 15
        assert all(c[0] == "0" for c in manifold.configurations)

    def test_invalid_sector(self, six_site):
        """Test sectors other than 0 and 1 are rejected."""
        with pytest.raises(ValueError):
            enumerate_ground(six_site, sector=2)

    def test_chunked_and_threaded(self, patch3):
        """Test chunking and workers do not change the result."""
        serial = enumerate_ground(patch3)
        threaded = enumerate_ground(patch3, chunk_size=32, workers=3)
        assert threaded.configurations == serial.configurations
        assert threaded.energy == serial.energy

    def test_float_couplings(self, patch1):
        """Test non-integral couplings use the energy tolerance."""
        manifold = enumerate_ground(patch1, {(0, 1): 0.5, (0, 2): 0.5, (1, 2): 0.5})
        assert manifold.degeneracy == 6
        assert manifold.energy == pytest.approx(-0.5)

    def test_cap(self, patch3):
        """Test lattices above the cap are refused."""
        with pytest.raises(CapExceededError):
            enumerate_ground(patch3, max_sites=8)

    def test_configurations_sorted(self, six_site):
        """Test the manifold is listed in increasing basis order."""
        configurations = enumerate_ground(six_site).configurations
        assert list(configurations) == sorted(configurations)


class TestGroundManifold:
    """Tests for GroundManifold validation."""

    def test_unsorted(self, patch1):
        """Test configurations must be sorted."""
        with pytest.raises(StateError):
            GroundManifold(patch1, ("100", "001"), -1)

    def test_wrong_width(self, patch1):
        """Test configurations must have one bit per site."""
        with pytest.raises(StateError):
            GroundManifold(patch1, ("10",), -1)

    def test_empty_superposition(self, patch1):
        """Test an empty manifold has no superposition."""
        with pytest.raises(EmptyManifoldError):
            equal_superposition(GroundManifold(patch1, (), 0))


class TestWStructure:
    """Tests for verify_w_structure."""

    def test_equal_superposition_passes(self, six_site, six_site_triangle_couplings):
        """Test the ground manifold never has a monochromatic up-triangle."""
        state = equal_superposition(enumerate_ground(six_site, six_site_triangle_couplings))
        report = verify_w_structure(state, six_site)
        assert report.passed
        assert report.checked == 30
        assert report.summary().startswith("pass")

    def test_monochromatic_fails(self, six_site):
        """Test a configuration with a monochromatic triangle is reported."""
        report = verify_w_structure(PureState.basis("010001"), six_site)
        assert not report.passed
        assert report.witnesses == (("010001", (2, 3, 4)),)
        assert "fail" in report.summary()

    def test_size_mismatch(self, six_site):
        """Test state and lattice sizes must agree."""
        with pytest.raises(StateError):
            verify_w_structure(PureState.basis("000"), six_site)


class TestFrustration:
    """Tests for is_frustrated."""

    def test_isotropic_triangle(self, patch1):
        """Test antiferromagnetic triangles are frustrated."""
        assert is_frustrated(patch1)

    def test_anisotropic_triangle(self, patch1):
        """Test a ferromagnetic base bond lifts the frustration."""
        assert not is_frustrated(patch1, anisotropic_couplings(patch1))


class TestWannierEstimate:
    """Tests for the finite-patch degeneracy exponent."""

    def test_small_patches(self):
        """Test exponent log2(M) / n on the first two patches."""
        points = wannier_estimate([1, 2])
        assert [p.degeneracy for p in points] == [6, 26]
        assert points[0].exponent == pytest.approx(math.log2(6) / 3)
