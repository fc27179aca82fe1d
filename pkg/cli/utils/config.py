"""Configuration access utilities."""

import json
import os
from typing import Any, Dict, Literal

from pydantic import BaseModel, ConfigDict, Field

from cli.utils.constants import DEFAULT_DB_PATH
from simplexnet.limits import (DENSE_DIAGONALIZATION_SITES, MAX_COVER_BITS, MAX_ENUMERATION_SITES,
                               MAX_HAMILTONIAN_SITES, MAX_REGION_SITES, MAX_STATE_SITES, PAIRWISE_MEMORY_CAP)


class CapsConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    max_hamiltonian_sites: int = Field(default=MAX_HAMILTONIAN_SITES, ge=1)
    dense_diagonalization_sites: int = Field(default=DENSE_DIAGONALIZATION_SITES, ge=1)
    max_enumeration_sites: int = Field(default=MAX_ENUMERATION_SITES, ge=1)
    max_state_sites: int = Field(default=MAX_STATE_SITES, ge=1)
    max_region_sites: int = Field(default=MAX_REGION_SITES, ge=1)
    pairwise_memory_cap: int = Field(default=PAIRWISE_MEMORY_CAP, ge=1)
    max_cover_bits: int = Field(default=MAX_COVER_BITS, ge=1)


class StorageConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    type: str = "duckdb"
    db_path: str = DEFAULT_DB_PATH
    enabled: bool = True


class LoggingConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"


class AppConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    caps: CapsConfig = Field(default_factory=CapsConfig)
    storage: StorageConfig = Field(default_factory=StorageConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    workers: int = Field(default=1, ge=1)


def load_config_file(config_path: str) -> Dict[str, Any]:
    """Load configuration from JSON file."""
    if not os.path.exists(config_path):
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r") as f:
        return json.load(f)


def get_config_value(app_config: Dict, key: str, default=None) -> Any:
    """Get value from app config with optional default."""
    return app_config.get(key, default)


def get_caps_config(app_config: Dict) -> CapsConfig:
    return CapsConfig.model_validate(get_config_value(app_config, "caps", {}))


def get_storage_config(app_config: Dict) -> StorageConfig:
    return StorageConfig.model_validate(get_config_value(app_config, "storage", {}))


def get_logging_config(app_config: Dict) -> LoggingConfig:
    return LoggingConfig.model_validate(get_config_value(app_config, "logging", {}))


def get_workers(app_config: Dict) -> int:
    return AppConfig.model_validate({"workers": get_config_value(app_config, "workers", 1)}).workers


def build_app_config(app_config: Dict) -> AppConfig:
    """Validate the whole configuration; unknown keys are rejected, "_"-prefixed keys are comments."""
    return AppConfig.model_validate({k: v for k, v in app_config.items() if not k.startswith("_")})
