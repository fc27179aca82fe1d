from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class BaseStorage(ABC):
    @abstractmethod
    def save_run(self, run: Dict[str, Any]) -> None:
        pass

    @abstractmethod
    def load_runs(self, experiment: Optional[str] = None) -> List[Dict[str, Any]]:
        pass

    @abstractmethod
    def save_table1_rows(self, run_id: str, rows: List[Dict[str, Any]]) -> None:
        pass

    @abstractmethod
    def load_table1_rows(self, run_id: str) -> List[Dict[str, Any]]:
        pass

    @abstractmethod
    def save_scan_evaluations(self, run_id: str, evaluations: List[Dict[str, Any]]) -> None:
        pass

    @abstractmethod
    def load_scan_evaluations(self, run_id: str) -> List[Dict[str, Any]]:
        pass

    @abstractmethod
    def save_ground_manifold(self, run_id: str, manifold: Dict[str, Any]) -> None:
        pass

    @abstractmethod
    def load_ground_manifolds(self, lattice: Optional[str] = None) -> List[Dict[str, Any]]:
        pass
