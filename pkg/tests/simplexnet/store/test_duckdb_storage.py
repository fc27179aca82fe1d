"""Tests for the DuckDB storage backend."""

from datetime import datetime

import duckdb
import pytest

from simplexnet.store.duckdb_storage import DuckDBStorage, column_differences
from simplexnet.store.factory import get_storage


def make_run(run_id="r1", experiment="table1", created_at=None):
    return {
        "run_id": run_id,
        "experiment": experiment,
        "config_hash": "abc123",
        "created_at": created_at or datetime(2024, 1, 1, 12, 0, 0),
        "provenance": {"experiment": experiment, "numpy": "1.26.0"},
    }


class TestRuns:
    """Tests for run bookkeeping."""

    def test_save_and_load(self, storage):
        """Test runs round-trip with their provenance."""
        storage.save_run(make_run())
        runs = storage.load_runs()
        assert len(runs) == 1
        assert runs[0]["run_id"] == "r1"
        assert runs[0]["provenance"] == {"experiment": "table1", "numpy": "1.26.0"}

    def test_filter_by_experiment(self, storage):
        """Test runs can be filtered by experiment."""
        storage.save_run(make_run("r1", "table1"))
        storage.save_run(make_run("r2", "scan4"))
        assert [r["run_id"] for r in storage.load_runs("scan4")] == ["r2"]

    def test_upsert(self, storage):
        """Test saving a run id twice updates it."""
        storage.save_run(make_run("r1", "table1"))
        storage.save_run(make_run("r1", "eq4"))
        runs = storage.load_runs()
        assert len(runs) == 1
        assert runs[0]["experiment"] == "eq4"

    def test_ordered_by_creation(self, storage):
        """Test runs are listed oldest first."""
        storage.save_run(make_run("late", created_at=datetime(2024, 2, 1)))
        storage.save_run(make_run("early", created_at=datetime(2024, 1, 1)))
        assert [r["run_id"] for r in storage.load_runs()] == ["early", "late"]


class TestTable1Rows:
    """Tests for table rows."""

    def test_round_trip(self, storage):
        """Test rows come back sorted with their reference."""
        rows = [
            {"side": 4, "n_sites": 15, "simplex": "w", "core_rows": 2, "n_a": 3, "entropy": 1.585,
             "reference": 1.585, "boundary": 2},
            {"side": 3, "n_sites": 10, "simplex": "ghz4", "core_rows": 2, "n_a": 3, "entropy": 1.0,
             "reference": None},
        ]
        storage.save_table1_rows("r1", rows)
        loaded = storage.load_table1_rows("r1")
        assert [r["side"] for r in loaded] == [3, 4]
        assert loaded[0]["reference"] is None
        assert loaded[1]["entropy"] == pytest.approx(1.585)

    def test_replace_on_resave(self, storage):
        """Test saving a run's rows again replaces them."""
        row = {"side": 3, "n_sites": 10, "simplex": "w", "core_rows": 2, "n_a": 3, "entropy": 1.0}
        storage.save_table1_rows("r1", [row])
        storage.save_table1_rows("r1", [dict(row, entropy=2.0)])
        loaded = storage.load_table1_rows("r1")
        assert len(loaded) == 1
        assert loaded[0]["entropy"] == 2.0

    def test_empty_is_noop(self, storage):
        """Test saving no rows leaves the table untouched."""
        storage.save_table1_rows("r1", [])
        assert storage.load_table1_rows("r1") == []


class TestScanEvaluations:
    """Tests for scan traces."""

    def test_round_trip(self, storage):
        """Test evaluations come back in step order."""
        evaluations = [
            {"step": k, "a0": 0.25, "a1": -0.25, "a2": 0.25, "a3": 0.25, "a4": 0.25, "entropy": float(k)}
            for k in (1, 0)
        ]
        storage.save_scan_evaluations("s1", evaluations)
        loaded = storage.load_scan_evaluations("s1")
        assert [e["step"] for e in loaded] == [0, 1]
        assert loaded[0]["a1"] == -0.25


class TestGroundManifolds:
    """Tests for stored manifold summaries."""

    def test_upsert(self, storage):
        """Test one summary per run and lattice."""
        storage.save_ground_manifold("ground", {"lattice": "six-site", "n_sites": 6, "degeneracy": 1,
                                                "energy": -3.0})
        storage.save_ground_manifold("ground", {"lattice": "six-site", "n_sites": 6, "degeneracy": 30,
                                                "energy": -3.0})
        storage.save_ground_manifold("ground", {"lattice": "patch:2", "n_sites": 6, "degeneracy": 26,
                                                "energy": -3.0})
        loaded = storage.load_ground_manifolds("six-site")
        assert len(loaded) == 1
        assert loaded[0]["degeneracy"] == 30
        assert len(storage.load_ground_manifolds()) == 2


class TestSchema:
    """Tests for schema checks on existing databases."""

    def test_file_database_persists(self, tmp_path):
        """Test runs survive reopening a file database in a new directory."""
        path = str(tmp_path / "nested" / "runs.duckdb")
        store = DuckDBStorage(path)
        store.save_run(make_run())
        store.close()
        reopened = DuckDBStorage(path)
        assert len(reopened.load_runs()) == 1
        reopened.close()

    def test_incompatible_table_backed_up(self, tmp_path):
        """Test a table with another schema is renamed and recreated."""
        path = str(tmp_path / "runs.duckdb")
        conn = duckdb.connect(path)
        conn.execute("CREATE TABLE runs (run_id TEXT, legacy INTEGER)")
        conn.execute("INSERT INTO runs VALUES ('old', 1)")
        conn.close()

        store = DuckDBStorage(path)
        tables = [row[0] for row in store.conn.execute("SHOW TABLES").fetchall()]
        assert any(name.startswith("runs_backup_") for name in tables)
        assert store.load_runs() == []
        store.close()

    def test_backup_keeps_old_rows(self, tmp_path):
        """Test rows of an older layout stay readable in the backup table."""
        path = str(tmp_path / "runs.duckdb")
        conn = duckdb.connect(path)
        conn.execute("CREATE TABLE ground_manifolds (lattice TEXT, total INTEGER)")
        conn.execute("INSERT INTO ground_manifolds VALUES ('six-site', 30)")
        conn.close()

        store = DuckDBStorage(path)
        backup = next(row[0] for row in store.conn.execute("SHOW TABLES").fetchall()
                      if row[0].startswith("ground_manifolds_backup_"))
        assert store.conn.execute(f"SELECT total FROM {backup}").fetchall() == [(30,)]
        assert store.load_ground_manifolds() == []
        store.close()


class TestColumnDifferences:
    """Tests for column_differences."""

    def test_same_layout(self):
        """Test identical layouts have no differences."""
        assert column_differences({"run_id": "VARCHAR"}, {"run_id": "VARCHAR"}) == []

    def test_all_kinds(self):
        """Test missing, retyped and dropped columns are each reported."""
        existing = {"run_id": "INTEGER", "legacy": "VARCHAR"}
        expected = {"run_id": "VARCHAR", "entropy": "DOUBLE"}
        assert column_differences(existing, expected) == [
            "column 'run_id' is INTEGER, expected VARCHAR",
            "column 'entropy' is missing",
            "column 'legacy' is no longer written",
        ]


class TestStorageFactory:
    """Tests for get_storage."""

    def test_default_in_memory(self):
        """Test the default backend is in-memory DuckDB."""
        store = get_storage()
        assert isinstance(store, DuckDBStorage)
        assert store.db_path == ":memory:"
        store.close()

    def test_unsupported(self):
        """Test unknown backends raise ValueError."""
        with pytest.raises(ValueError, match="Unsupported storage_type"):
            get_storage("sqlite")
