"""State shared by the command handlers once global options are parsed."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from cli.utils.config import CapsConfig, get_caps_config, get_workers
from simplexnet.store.base_storage import BaseStorage


@dataclass
class AppContext:
    config: Dict[str, Any] = field(default_factory=dict)
    storage: Optional[BaseStorage] = None

    @property
    def caps(self) -> CapsConfig:
        return get_caps_config(self.config)

    @property
    def workers(self) -> int:
        return get_workers(self.config)
