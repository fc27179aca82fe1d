import logging
from typing import Dict, Optional

import numpy as np

from simplexnet.errors import ContractionMemoryError, ContractionOrderError
from simplexnet.limits import PAIRWISE_MEMORY_CAP
from simplexnet.network.base_contractor import BaseContractor, ContractionResult
from simplexnet.network.planner import ContractionOrder, plan_order
from simplexnet.network.spec import NetworkSpec
from simplexnet.network.tensors import LabeledTensor, network_tensors
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")


class PairwiseContractor(BaseContractor):
    """Generic dense engine: contracts tensor pairs in a given order with tensordot."""

    def __init__(self, memory_cap: int = PAIRWISE_MEMORY_CAP, open_physical: bool = True):
        self.memory_cap = memory_cap
        self.open_physical = open_physical

    @property
    def method(self) -> str:
        return "pairwise"

    def contract(self, spec: NetworkSpec, order: Optional[ContractionOrder] = None) -> ContractionResult:
        tensors = network_tensors(spec, self.open_physical)
        if order is None:
            order = plan_order(spec, self.open_physical)

        pool: Dict[int, LabeledTensor] = dict(enumerate(tensors))
        next_id = len(tensors)
        peak = max(t.data.size for t in tensors)

        for step, (i, j) in enumerate(order):
            if i == j:
                raise ContractionOrderError(f"Step {step} contracts tensor {i} with itself")
            for k in (i, j):
                if k not in pool:
                    raise ContractionOrderError(f"Step {step} references unknown tensor {k}")

            left, right = pool.pop(i), pool.pop(j)
            shared = [label for label in left.labels if label in right.labels]
            labels = tuple(label for label in left.labels if label not in shared) + \
                tuple(label for label in right.labels if label not in shared)
            size = 2 ** len(labels)
            if size > self.memory_cap:
                raise ContractionMemoryError(size, self.memory_cap)

            data = np.tensordot(left.data, right.data,
                                axes=([left.labels.index(label) for label in shared],
                                      [right.labels.index(label) for label in shared]))
            pool[next_id] = LabeledTensor(data, labels)
            next_id += 1
            peak = max(peak, size)

        if len(pool) != 1:
            raise ContractionOrderError(f"Order leaves {len(pool)} tensors uncontracted")
        final = next(iter(pool.values()))

        if self.open_physical:
            permutation = [final.labels.index(("p", site)) for site in range(spec.n_sites)]
            amplitudes = np.transpose(final.data, permutation).reshape(-1).astype(complex)
        else:
            amplitudes = np.asarray(final.data, dtype=complex).reshape(())
        norm_squared = float(np.vdot(amplitudes, amplitudes).real)
        logger.debug("Pairwise contraction finished in %d steps, peak tensor %d elements", len(order), peak)
        return ContractionResult(amplitudes, norm_squared, peak, self.method)


def contract_pairwise(spec: NetworkSpec, order: Optional[ContractionOrder] = None,
                      memory_cap: int = PAIRWISE_MEMORY_CAP) -> PureState:
    return PairwiseContractor(memory_cap=memory_cap).contract(spec, order).state
