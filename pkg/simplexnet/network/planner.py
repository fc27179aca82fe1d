import logging
from typing import Dict, FrozenSet, List, Tuple

from simplexnet.network.spec import NetworkSpec
from simplexnet.network.tensors import network_labels

logger = logging.getLogger("simplexnet")

ContractionOrder = List[Tuple[int, int]]


def plan_order(spec: NetworkSpec, open_physical: bool = True) -> ContractionOrder:
    """Greedy pairwise order minimizing each intermediate's size.

    Each step contracts the connected pair whose result is smallest, ties going to
    the lowest (i, j); the new tensor takes the next unused id. Disconnected
    remainders are joined in id order.
    """
    labels: Dict[int, FrozenSet] = {k: frozenset(legs) for k, legs in enumerate(network_labels(spec, open_physical))}
    next_id = len(labels)
    order: ContractionOrder = []

    while len(labels) > 1:
        ids = sorted(labels)
        best = None
        for a, i in enumerate(ids):
            for j in ids[a + 1:]:
                if labels[i].isdisjoint(labels[j]):
                    continue
                key = (len(labels[i] ^ labels[j]), i, j)
                if best is None or key < best:
                    best = key
        if best is None:
            i, j = ids[0], ids[1]
        else:
            _, i, j = best
        merged = labels.pop(i) ^ labels.pop(j)
        labels[next_id] = merged
        order.append((i, j))
        logger.debug("Plan step %d: (%d, %d) -> %d with %d legs", len(order), i, j, next_id, len(merged))
        next_id += 1

    return order
