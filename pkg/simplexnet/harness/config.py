import hashlib
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from simplexnet.limits import MAX_REGION_SITES
from simplexnet.simplex.catalog import TABLE1_SIMPLICES, available_simplices

EXPERIMENTS = ("table1", "eq4", "scan4", "aniso", "sweep")
MAX_PATCH_SIDE = 6


class ExperimentConfig(BaseModel):
    """Parameters of one harness run; the hash of its JSON form identifies the run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    experiment: Literal["table1", "eq4", "scan4", "aniso", "sweep"]
    sides: List[int] = Field(default_factory=lambda: [3, 4, 5, 6])
    core_rows: List[int] = Field(default_factory=lambda: [2, 3, 4])
    placement: Literal["apex", "centered"] = "apex"
    simplices: List[str] = Field(default_factory=lambda: list(TABLE1_SIMPLICES))
    field: float = Field(default=1e-3, gt=0)
    class_separation: float = Field(default=1e-3, gt=0)
    grid: int = Field(default=9, ge=2, le=64)
    seed: int = 7
    restarts: int = Field(default=2, ge=0)
    max_iterations: int = Field(default=50, ge=1)
    tolerance: float = Field(default=1e-6, gt=0)
    points: int = Field(default=11, ge=2)
    workers: int = Field(default=1, ge=1)
    output: Optional[str] = None

    @field_validator("sides")
    @classmethod
    def _check_sides(cls, sides: List[int]) -> List[int]:
        if not sides:
            raise ValueError("At least one patch side is required")
        for side in sides:
            if not 1 <= side <= MAX_PATCH_SIDE:
                raise ValueError(f"Patch side {side} outside 1..{MAX_PATCH_SIDE}")
        return sides

    @field_validator("core_rows")
    @classmethod
    def _check_core_rows(cls, core_rows: List[int]) -> List[int]:
        if not core_rows:
            raise ValueError("At least one core size is required")
        for rows in core_rows:
            if rows < 1 or rows * (rows + 1) // 2 > MAX_REGION_SITES:
                raise ValueError(f"Core of {rows} rows exceeds the region cap of {MAX_REGION_SITES} sites")
        return core_rows

    @field_validator("simplices")
    @classmethod
    def _check_simplices(cls, simplices: List[str]) -> List[str]:
        unknown = [s for s in simplices if s not in available_simplices()]
        if unknown:
            raise ValueError(f"Unknown simplex labels: {unknown}")
        return simplices

    def config_hash(self) -> str:
        payload = self.model_dump_json(exclude={"output", "workers"})
        return hashlib.sha256(payload.encode()).hexdigest()
