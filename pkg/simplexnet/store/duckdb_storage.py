import json
import logging
import os
import time
from typing import Any, Dict, List, Optional

import duckdb

from simplexnet.store.base_storage import BaseStorage

logger = logging.getLogger("simplexnet")


class DuckDBStorage(BaseStorage):
    def __init__(self, db_path: str = ":memory:"):
        self.db_path = db_path
        if db_path != ":memory:":
            directory = os.path.dirname(db_path)
            if directory:
                os.makedirs(directory, exist_ok=True)

        self.conn = duckdb.connect(database=db_path)
        self._init_runs_table()
        self._init_table1_rows_table()
        self._init_scan4_evaluations_table()
        self._init_ground_manifolds_table()

    def close(self) -> None:
        self.conn.close()

    def _fetch_dicts(self, sql: str, params: tuple = ()) -> List[Dict[str, Any]]:
        rows = self.conn.execute(sql, params).fetchall()
        columns = [desc[0] for desc in self.conn.description]
        return [dict(zip(columns, row)) for row in rows]

    def _create_runs_table_sql(self) -> str:
        return """
            CREATE TABLE runs (
                run_id TEXT NOT NULL PRIMARY KEY,
                experiment TEXT NOT NULL,
                config_hash TEXT NOT NULL,
                created_at TIMESTAMP NOT NULL,
                provenance TEXT
            );
        """

    def _init_runs_table(self):
        expected_columns = {
            "run_id": "VARCHAR",
            "experiment": "VARCHAR",
            "config_hash": "VARCHAR",
            "created_at": "TIMESTAMP",
            "provenance": "VARCHAR",
        }
        self._init_table("runs", self._create_runs_table_sql(), expected_columns)

    def save_run(self, run: Dict[str, Any]) -> None:
        insert_sql = """
            INSERT INTO runs (run_id, experiment, config_hash, created_at, provenance)
            VALUES (?, ?, ?, ?, ?)
            ON CONFLICT(run_id) DO UPDATE SET
                experiment=excluded.experiment,
                config_hash=excluded.config_hash,
                created_at=excluded.created_at,
                provenance=excluded.provenance
        """
        logger.info("Saving run %s (%s)", run["run_id"], run["experiment"])
        self.conn.execute(insert_sql, (
            run["run_id"],
            run["experiment"],
            run["config_hash"],
            run["created_at"],
            json.dumps(run.get("provenance")),
        ))

    def load_runs(self, experiment: Optional[str] = None) -> List[Dict[str, Any]]:
        sql = "SELECT * FROM runs"
        params: tuple = ()
        if experiment:
            sql += " WHERE experiment = ?"
            params = (experiment,)
        sql += " ORDER BY created_at, run_id"
        runs = self._fetch_dicts(sql, params)
        for run in runs:
            run["provenance"] = json.loads(run["provenance"]) if run["provenance"] else None
        return runs

    def _create_table1_rows_table_sql(self) -> str:
        return """
            CREATE TABLE table1_rows (
                run_id TEXT NOT NULL,
                side INTEGER NOT NULL,
                n_sites INTEGER NOT NULL,
                simplex TEXT NOT NULL,
                core_rows INTEGER NOT NULL,
                n_a INTEGER NOT NULL,
                entropy DOUBLE NOT NULL,
                reference DOUBLE,
                PRIMARY KEY (run_id, side, simplex, core_rows)
            );
        """

    def _init_table1_rows_table(self):
        expected_columns = {
            "run_id": "VARCHAR",
            "side": "INTEGER",
            "n_sites": "INTEGER",
            "simplex": "VARCHAR",
            "core_rows": "INTEGER",
            "n_a": "INTEGER",
            "entropy": "DOUBLE",
            "reference": "DOUBLE",
        }
        self._init_table("table1_rows", self._create_table1_rows_table_sql(), expected_columns)

    def save_table1_rows(self, run_id: str, rows: List[Dict[str, Any]]) -> None:
        if not rows:
            logger.warning("No Table 1 rows provided to save.")
            return
        self.conn.execute("DELETE FROM table1_rows WHERE run_id = ?", (run_id,))
        insert_sql = """
            INSERT INTO table1_rows (run_id, side, n_sites, simplex, core_rows, n_a, entropy, reference)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        """
        data_to_insert = [
            (run_id, r["side"], r["n_sites"], r["simplex"], r["core_rows"], r["n_a"], r["entropy"], r.get("reference"))
            for r in rows
        ]
        logger.info("Saving %d Table 1 rows for run %s", len(data_to_insert), run_id)
        self.conn.executemany(insert_sql, data_to_insert)

    def load_table1_rows(self, run_id: str) -> List[Dict[str, Any]]:
        return self._fetch_dicts(
            "SELECT * FROM table1_rows WHERE run_id = ? ORDER BY side, core_rows, simplex", (run_id,))

    def _create_scan4_evaluations_table_sql(self) -> str:
        return """
            CREATE TABLE scan4_evaluations (
                run_id TEXT NOT NULL,
                step INTEGER NOT NULL,
                a0 DOUBLE NOT NULL,
                a1 DOUBLE NOT NULL,
                a2 DOUBLE NOT NULL,
                a3 DOUBLE NOT NULL,
                a4 DOUBLE NOT NULL,
                entropy DOUBLE NOT NULL,
                PRIMARY KEY (run_id, step)
            );
        """

    def _init_scan4_evaluations_table(self):
        expected_columns = {"run_id": "VARCHAR", "step": "INTEGER"}
        expected_columns.update({f"a{k}": "DOUBLE" for k in range(5)})
        expected_columns["entropy"] = "DOUBLE"
        self._init_table("scan4_evaluations", self._create_scan4_evaluations_table_sql(), expected_columns)

    def save_scan_evaluations(self, run_id: str, evaluations: List[Dict[str, Any]]) -> None:
        if not evaluations:
            logger.warning("No scan evaluations provided to save.")
            return
        self.conn.execute("DELETE FROM scan4_evaluations WHERE run_id = ?", (run_id,))
        insert_sql = """
            INSERT INTO scan4_evaluations (run_id, step, a0, a1, a2, a3, a4, entropy)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
        """
        data_to_insert = [
            (run_id, e["step"], e["a0"], e["a1"], e["a2"], e["a3"], e["a4"], e["entropy"])
            for e in evaluations
        ]
        logger.info("Saving %d scan evaluations for run %s", len(data_to_insert), run_id)
        self.conn.executemany(insert_sql, data_to_insert)

    def load_scan_evaluations(self, run_id: str) -> List[Dict[str, Any]]:
        return self._fetch_dicts("SELECT * FROM scan4_evaluations WHERE run_id = ? ORDER BY step", (run_id,))

    def _create_ground_manifolds_table_sql(self) -> str:
        return """
            CREATE TABLE ground_manifolds (
                run_id TEXT NOT NULL,
                lattice TEXT NOT NULL,
                n_sites INTEGER NOT NULL,
                degeneracy BIGINT NOT NULL,
                energy DOUBLE NOT NULL,
                PRIMARY KEY (run_id, lattice)
            );
        """

    def _init_ground_manifolds_table(self):
        expected_columns = {
            "run_id": "VARCHAR",
            "lattice": "VARCHAR",
            "n_sites": "INTEGER",
            "degeneracy": "BIGINT",
            "energy": "DOUBLE",
        }
        self._init_table("ground_manifolds", self._create_ground_manifolds_table_sql(), expected_columns)

    def save_ground_manifold(self, run_id: str, manifold: Dict[str, Any]) -> None:
        insert_sql = """
            INSERT INTO ground_manifolds (run_id, lattice, n_sites, degeneracy, energy)
            VALUES (?, ?, ?, ?, ?)
            ON CONFLICT(run_id, lattice) DO UPDATE SET
                n_sites=excluded.n_sites,
                degeneracy=excluded.degeneracy,
                energy=excluded.energy
        """
        self.conn.execute(insert_sql, (
            run_id, manifold["lattice"], manifold["n_sites"], manifold["degeneracy"], manifold["energy"]))

    def load_ground_manifolds(self, lattice: Optional[str] = None) -> List[Dict[str, Any]]:
        if lattice:
            return self._fetch_dicts(
                "SELECT * FROM ground_manifolds WHERE lattice = ? ORDER BY run_id", (lattice,))
        return self._fetch_dicts("SELECT * FROM ground_manifolds ORDER BY lattice, run_id")

    def _init_table(self, table_name: str, create_sql: str, expected_columns: Dict[str, str]):
        """Create a run table, or move an older run table with other columns aside before recreating it.

        Rows written by an earlier layout stay readable in ``<table>_backup_<timestamp>``.
        """
        try:
            rows = self.conn.execute(f"PRAGMA table_info('{table_name}')").fetchall()
        except duckdb.Error as e:
            logger.debug("Run table '%s' not found: %s", table_name, e)
            rows = []
        existing = {row[1]: row[2].upper() for row in rows}
        if not existing:
            logger.debug("Creating run table '%s'", table_name)
            self.conn.execute(create_sql)
            return

        differences = column_differences(existing, expected_columns)
        if not differences:
            logger.debug("Run table '%s' matches the current layout", table_name)
            return
        for difference in differences:
            logger.warning("Run table '%s': %s", table_name, difference)
        backup_name = f"{table_name}_backup_{time.strftime('%Y%m%d_%H%M%S')}"
        logger.warning("Keeping old '%s' runs in '%s' and starting a fresh table", table_name, backup_name)
        self.conn.execute(f"ALTER TABLE {table_name} RENAME TO {backup_name};")
        self.conn.execute(create_sql)


def column_differences(existing: Dict[str, str], expected: Dict[str, str]) -> List[str]:
    """Readable differences between a stored column layout and the one run storage writes."""
    differences = []
    for column, column_type in expected.items():
        found = existing.get(column)
        if found is None:
            differences.append(f"column '{column}' is missing")
        elif found != column_type:
            differences.append(f"column '{column}' is {found}, expected {column_type}")
    differences += [f"column '{column}' is no longer written" for column in existing if column not in expected]
    return differences
