"""Tests for command-line parsing."""

import pytest

from cli.context import AppContext
from simplexnet_app import build_parser


@pytest.fixture
def parser():
    """Parser with an empty context."""
    return build_parser(AppContext())


class TestParser:
    """Tests for the argument parser."""

    def test_command_required(self, parser):
        """Test a sub-command must be given."""
        with pytest.raises(SystemExit):
            parser.parse_args([])

    def test_global_options(self, parser):
        """Test global options precede the command."""
        args = parser.parse_args(["--no-store", "--verbose", "info"])
        assert args.no_store and args.verbose
        assert args.command == "info"

    def test_contract_defaults(self, parser):
        """Test contract defaults to the diagonal engine."""
        args = parser.parse_args(["contract", "--network", "net.txt"])
        assert args.method == "diagonal"
        assert args.threshold == 0.0
        assert args.out is None

    def test_contract_rejects_method(self, parser):
        """Test unknown contraction methods are rejected."""
        with pytest.raises(SystemExit):
            parser.parse_args(["contract", "--network", "net.txt", "--method", "mps"])

    def test_eig_options(self, parser):
        """Test the coupling and field options."""
        args = parser.parse_args(["eig", "--lattice", "six-site", "--J", "2", "--lambda", "0.01"])
        assert args.J == 2.0
        assert args.field == 0.01

    def test_eig_default_field(self, parser):
        """Test the default transverse field is small."""
        assert parser.parse_args(["eig", "--lattice", "six-site"]).field == 1e-3

    def test_xcover_default_method(self, parser):
        """Test model counting defaults to the tensor network."""
        assert parser.parse_args(["xcover", "--instance", "x.cnf"]).method == "tn"

    def test_sweep_defaults(self, parser):
        """Test the sweep defaults."""
        args = parser.parse_args(["sweep"])
        assert (args.side, args.core_rows, args.points) == (4, 3, 11)

    def test_scan4_unset_options(self, parser):
        """Test scan options left out stay unset."""
        args = parser.parse_args(["scan4", "--seed", "3"])
        assert args.seed == 3
        assert args.grid is None and args.restarts is None

    def test_table1_placement_choice(self, parser):
        """Test only known core placements are accepted."""
        assert parser.parse_args(["table1", "--placement", "centered"]).placement == "centered"
        with pytest.raises(SystemExit):
            parser.parse_args(["table1", "--placement", "corner"])
