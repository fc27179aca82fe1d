import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from simplexnet.errors import EmptyNetworkError, SimplexNetError
from simplexnet.network.spec import NetworkSpec
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")


@dataclass(frozen=True, eq=False)
class ContractionResult:
    """Raw contraction output; a closed network gives a 0-d ``amplitudes`` array."""

    amplitudes: np.ndarray
    norm_squared: float
    peak_size: int
    method: str

    @property
    def total(self) -> complex:
        return complex(np.sum(self.amplitudes))

    @property
    def state(self) -> PureState:
        if np.ndim(self.amplitudes) == 0:
            raise SimplexNetError("A network without physical legs has no state")
        if not self.norm_squared > 0:
            raise EmptyNetworkError("All contracted amplitudes vanish; the simplices are inconsistent")
        return PureState.from_amplitudes(self.amplitudes)


class BaseContractor(ABC):
    @property
    @abstractmethod
    def method(self) -> str:
        pass

    @abstractmethod
    def contract(self, spec: NetworkSpec) -> ContractionResult:
        """
        Contract the network without normalizing.
        Returns the raw amplitudes, their squared norm and the peak tensor size.
        """
        pass

    def contract_state(self, spec: NetworkSpec) -> PureState:
        result = self.contract(spec)
        logger.debug("%s contraction of %d sites: norm^2=%.6g peak=%d",
                     self.method, spec.n_sites, result.norm_squared, result.peak_size)
        return result.state
