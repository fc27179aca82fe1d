"""Tests for simplex, state and manifold files."""

import math

import pytest

from simplexnet.errors import FormatError
from simplexnet.formats.lines import format_complex, parse_complex
from simplexnet.formats.manifold_format import format_manifold, parse_manifold, read_manifold, write_manifold
from simplexnet.formats.simplex_format import format_simplices, parse_simplices
from simplexnet.formats.state_format import STATE_COLUMNS, read_state, state_frame, write_state
from simplexnet.frustration.manifold import enumerate_ground
from simplexnet.simplex.catalog import get_simplex
from simplexnet.spectral.state import PureState


class TestComplexTokens:
    """Tests for number formatting."""

    @pytest.mark.parametrize("value", [0.5, -1.25, 0.1 + 0.2j, -3j, 1e-17 - 2.5j])
    def test_round_trip(self, value):
        """Test formatted numbers parse back exactly."""
        assert parse_complex(format_complex(value), 1) == value

    def test_bad_token(self):
        """Test non-numbers are rejected with the line number."""
        with pytest.raises(FormatError) as error:
            parse_complex("abc", 4)
        assert error.value.line_number == 4


class TestSimplexFormat:
    """Tests for simplex definition files."""

    def test_round_trip(self):
        """Test catalog simplices survive formatting."""
        simplices = [get_simplex("w"), get_simplex("w4")]
        parsed = parse_simplices(format_simplices(simplices))
        assert parsed["w"].is_close(simplices[0])
        assert parsed["w4"].is_close(simplices[1])

    def test_sym4_shorthand(self):
        """Test the symmetric shorthand expands to sixteen amplitudes."""
        parsed = parse_simplices("sym4 1 0 0 0 1\n")
        assert parsed["sym4"].support() == ["0000", "1111"]

    def test_duplicate_label(self):
        """Test labels may be defined once."""
        with pytest.raises(FormatError) as error:
            parse_simplices("s 3 a 1 0 0 0 0 0 0 0\ns 3 a 0 1 0 0 0 0 0 0\n")
        assert error.value.line_number == 2

    def test_wrong_amplitude_count(self):
        """Test amplitude count must match the arity."""
        with pytest.raises(FormatError):
            parse_simplices("s 3 a 1 0 0\n")

    def test_bad_arity(self):
        """Test the arity must be an integer."""
        with pytest.raises(FormatError):
            parse_simplices("s three a 1 0 0 0 0 0 0 0\n")


class TestStateFormat:
    """Tests for state CSV files."""

    def test_round_trip_with_header(self, tmp_path):
        """Test header lines are skipped and amplitudes restored."""
        state = PureState.from_mapping(3, {"001": 1.0, "010": -1.0j, "100": 0.5})
        path = str(tmp_path / "state.csv")
        write_state(path, state, header={"E0": "-1.0"})
        assert open(path).readline() == "# E0: -1.0\n"
        loaded = read_state(path)
        assert loaded.max_deviation(state) < 1e-12

    def test_leading_zeros_kept(self, tmp_path):
        """Test bitstrings are read as text."""
        path = str(tmp_path / "state.csv")
        write_state(path, PureState.basis("0001"))
        assert read_state(path).support() == ["0001"]

    def test_frame_threshold(self):
        """Test small amplitudes are dropped from the frame."""
        state = PureState.from_amplitudes([1.0, 1e-8, 0.0, 0.0])
        frame = state_frame(state, threshold=1e-6)
        assert list(frame.columns) == STATE_COLUMNS
        assert frame["bitstring"].tolist() == ["00"]

    def test_bad_columns(self, tmp_path):
        """Test the column header is checked."""
        path = tmp_path / "state.csv"
        path.write_text("bits,re\n01,1.0\n")
        with pytest.raises(FormatError):
            read_state(str(path))

    def test_bad_bitstring(self, tmp_path):
        """Test mismatched bitstring widths report their row."""
        path = tmp_path / "state.csv"
        path.write_text("bitstring,re,im\n01,1.0,0.0\n011,1.0,0.0\n")
        with pytest.raises(FormatError) as error:
            read_state(str(path))
        assert error.value.line_number == 3

    def test_duplicates(self, tmp_path):
        """Test repeated bitstrings are rejected."""
        path = tmp_path / "state.csv"
        path.write_text("bitstring,re,im\n01,1.0,0.0\n01,1.0,0.0\n")
        with pytest.raises(FormatError):
            read_state(str(path))

    def test_zero_state(self, tmp_path):
        """Test all-zero amplitudes are rejected."""
        path = tmp_path / "state.csv"
        path.write_text("bitstring,re,im\n01,0.0,0.0\n")
        with pytest.raises(FormatError):
            read_state(str(path))


class TestManifoldFormat:
    """Tests for ground manifold listings."""

    def test_round_trip(self, six_site, six_site_triangle_couplings, tmp_path):
        """Test the listing keeps count, energy and configurations."""
        manifold = enumerate_ground(six_site, six_site_triangle_couplings)
        path = str(tmp_path / "ground.txt")
        write_manifold(path, manifold)
        listing = read_manifold(path)
        assert listing.degeneracy == 30
        assert listing.energy == -3.0
        assert listing.configurations == manifold.configurations

    def test_header(self, patch1):
        """Test the header line."""
        assert format_manifold(enumerate_ground(patch1)).splitlines()[0] == "M=6 E0=-1"

    def test_count_mismatch(self):
        """Test the announced count is checked."""
        with pytest.raises(FormatError):
            parse_manifold("M=2 E0=-1\n001\n")

    def test_bad_header(self):
        """Test malformed headers are rejected on line 1."""
        with pytest.raises(FormatError) as error:
            parse_manifold("count 2\n")
        assert error.value.line_number == 1

    def test_bad_bitstring(self):
        """Test non-binary lines report their line."""
        with pytest.raises(FormatError) as error:
            parse_manifold("M=1 E0=0\n01x\n")
        assert error.value.line_number == 2

    def test_energy_float(self):
        """Test non-integral energies parse."""
        assert math.isclose(parse_manifold("M=0 E0=-0.5\n").energy, -0.5)
