"""Dense tensor list of a network.

Simplex tensors come first (ids 0..T-1), then one copy tensor per site
(ids T..T+n-1). Leg labels are ("b", bond) for a simplex leg and ("p", site) for a
physical index.
"""

from typing import Hashable, List, NamedTuple, Tuple

import numpy as np

from simplexnet.network.spec import NetworkSpec, copy_tensor

Label = Tuple[str, int]


class LabeledTensor(NamedTuple):
    data: np.ndarray
    labels: Tuple[Hashable, ...]


def network_labels(spec: NetworkSpec, open_physical: bool = True) -> List[Tuple[Label, ...]]:
    """Leg labels of every tensor, in tensor-id order."""
    lattice = spec.lattice
    labels: List[Tuple[Label, ...]] = []
    site_bonds: List[List[Label]] = [[] for _ in range(lattice.n_sites)]
    bond = 0
    for simplex in lattice.simplices:
        legs = []
        for site in simplex:
            legs.append(("b", bond))
            site_bonds[site].append(("b", bond))
            bond += 1
        labels.append(tuple(legs))
    for site, bonds in enumerate(site_bonds):
        physical = [("p", site)] if open_physical else []
        labels.append(tuple(bonds + physical))
    return labels


def network_tensors(spec: NetworkSpec, open_physical: bool = True) -> List[LabeledTensor]:
    labels = network_labels(spec, open_physical)
    n_simplices = len(spec.simplex_assignment)
    tensors = [LabeledTensor(np.asarray(s.tensor()), labels[t]) for t, s in enumerate(spec.simplex_assignment)]
    for site_labels in labels[n_simplices:]:
        tensors.append(LabeledTensor(copy_tensor(len(site_labels)), site_labels))
    return tensors
