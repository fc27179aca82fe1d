from typing import Optional

from simplexnet.store.base_storage import BaseStorage


def get_storage(storage_type: str = "duckdb", config: Optional[dict] = None) -> BaseStorage:
    """
    Returns a storage backend instance based on storage_type.
    Defaults to an in-memory DuckDBStorage; `config` may carry `db_path`.
    """
    if storage_type == "duckdb":
        from simplexnet.store.duckdb_storage import DuckDBStorage

        db_path = ":memory:"
        if config and "db_path" in config:
            db_path = config["db_path"]
        return DuckDBStorage(db_path=db_path)

    raise ValueError(f"Unsupported storage_type: {storage_type}")
