"""Tests for running commands through the entry point."""

import json

import pytest

from cli.utils.constants import EXIT_ERROR, EXIT_OK, GROUND_RUN_ID
from simplexnet_app import main


@pytest.fixture
def config_file(tmp_path, app_config):
    """Config file with storage disabled."""
    path = tmp_path / "config.json"
    path.write_text(json.dumps(app_config))
    return str(path)


@pytest.fixture
def ghz_network(tmp_path):
    """Single-triangle network carrying the GHZ simplex."""
    path = tmp_path / "ghz.net"
    path.write_text("n 3\nt 0 1 2\na ghz\n")
    return str(path)


def run(config_file, *argv):
    return main(["--config", config_file, "--no-store", *argv])


class TestConfigHandling:
    """Tests for configuration errors."""

    def test_missing_config(self, tmp_path):
        """Test an explicitly named missing config fails."""
        assert main(["--config", str(tmp_path / "absent.json"), "info"]) == EXIT_ERROR

    def test_invalid_config(self, tmp_path):
        """Test an invalid config fails."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"workers": 0}))
        assert main(["--config", str(path), "info"]) == EXIT_ERROR

    def test_info(self, config_file):
        """Test the info command runs without storage."""
        assert run(config_file, "info") == EXIT_OK


class TestCoverCommand:
    """Tests for the xcover command."""

    @pytest.mark.parametrize("method", ["tn", "brute"])
    def test_count(self, config_file, instance_file, capsys, method):
        """Test the six-site instance has five solutions."""
        assert run(config_file, "xcover", "--instance", instance_file, "--method", method) == EXIT_OK
        assert capsys.readouterr().out.strip() == "solutions = 5"

    def test_missing_instance(self, config_file, tmp_path):
        """Test a missing instance file fails."""
        assert run(config_file, "xcover", "--instance", str(tmp_path / "absent.cnf")) == EXIT_ERROR


class TestSpectralCommands:
    """Tests for the eig, entropy and ground commands."""

    def test_ground(self, config_file, capsys):
        """Test the side-2 patch manifold listing."""
        assert run(config_file, "ground", "--lattice", "patch:2") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "M=26 E0=-3"
        assert len(lines) == 27
        assert "001100" in lines and "000000" not in lines

    def test_ground_file(self, config_file, lattice_file, capsys):
        """Test the six-site file lattice with one coupling per edge."""
        assert run(config_file, "ground", "--lattice", lattice_file) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "M=6 E0=-4"
        assert all(line[2] == line[4] for line in lines[1:])

    def test_ground_stored(self, config_file, mocker, mock_storage):
        """Test the manifold summary is stored under the ground run id."""
        mocker.patch("simplexnet_app.get_storage", return_value=mock_storage)
        with open(config_file) as f:
            config = json.load(f)
        config["storage"]["enabled"] = True
        with open(config_file, "w") as f:
            json.dump(config, f)

        assert main(["--config", config_file, "ground", "--lattice", "patch:1"]) == EXIT_OK
        run_id, manifold = mock_storage.save_ground_manifold.call_args.args
        assert run_id == GROUND_RUN_ID
        assert manifold["lattice"] == "patch:1"
        assert manifold["degeneracy"] == 6

    def test_eig_then_entropy(self, config_file, tmp_path, capsys):
        """Test a stored ground state can be read back for an entropy."""
        state_path = str(tmp_path / "ground.csv")
        assert run(config_file, "eig", "--lattice", "patch:2", "--out", state_path) == EXIT_OK
        assert capsys.readouterr().out.startswith("E0 = -3.0")

        assert run(config_file, "entropy", "--state", state_path, "--region", "0",
                   "--lattice", "patch:2") == EXIT_OK
        value = float(capsys.readouterr().out.strip().split("=")[1])
        assert 0.0 < value <= 1.0

    def test_entropy_bad_region(self, config_file, ghz_network, tmp_path):
        """Test a region site outside the state fails."""
        state_path = str(tmp_path / "ghz.csv")
        assert run(config_file, "contract", "--network", ghz_network, "--out", state_path) == EXIT_OK
        assert run(config_file, "entropy", "--state", state_path, "--region", "5") == EXIT_ERROR


class TestNetworkCommand:
    """Tests for the contract command."""

    @pytest.mark.parametrize("method", ["diagonal", "pairwise"])
    def test_contract_to_stdout(self, config_file, ghz_network, capsys, method):
        """Test the GHZ amplitudes are printed after the header."""
        assert run(config_file, "contract", "--network", ghz_network, "--method", method) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert f"# method: {method}" in lines
        body = [line for line in lines if not line.startswith("#")]
        assert body[0] == "bitstring,re,im"
        assert [line.split(",")[0] for line in body[1:]] == ["000", "111"]

    def test_contract_then_entropy(self, config_file, ghz_network, tmp_path, capsys):
        """Test one site of the GHZ state carries one ebit."""
        state_path = str(tmp_path / "ghz.csv")
        assert run(config_file, "contract", "--network", ghz_network, "--out", state_path) == EXIT_OK
        assert run(config_file, "entropy", "--state", state_path, "--region", "0") == EXIT_OK
        assert capsys.readouterr().out.strip() == "S = 1.000000"

    def test_missing_network(self, config_file, tmp_path):
        """Test a missing network file fails."""
        assert run(config_file, "contract", "--network", str(tmp_path / "absent.net")) == EXIT_ERROR


class TestExperimentCommands:
    """Tests for the experiment commands."""

    def test_table1_csv(self, config_file, tmp_path):
        """Test the table is written as CSV after the provenance header."""
        out = tmp_path / "table1.csv"
        assert run(config_file, "table1", "--sides", "3", "--core-rows", "2",
                   "--simplices", "ghz", "--out", str(out)) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "# experiment: table1"
        header = [line for line in lines if not line.startswith("#")][0]
        assert "entropy" in header.split(",")

    def test_table1_bad_sides(self, config_file):
        """Test invalid side lists fail."""
        assert run(config_file, "table1", "--sides", "3,x") == EXIT_ERROR

    def test_aniso_report(self, config_file, tmp_path):
        """Test the anisotropy report is written as text."""
        out = tmp_path / "aniso.txt"
        assert run(config_file, "aniso", "--out", str(out)) == EXIT_OK
        text = out.read_text()
        assert "[single-triangle]" in text
        assert "matches_prediction: True" in text

    def test_sweep(self, config_file, tmp_path):
        """Test the sweep writes one row per point."""
        out = tmp_path / "sweep.csv"
        assert run(config_file, "sweep", "--side", "3", "--core-rows", "2", "--points", "3",
                   "--out", str(out)) == EXIT_OK
        body = [line for line in out.read_text().splitlines() if not line.startswith("#")]
        assert len(body) == 4
