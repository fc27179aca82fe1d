from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from simplexnet.errors import NetworkError, SimplexError
from simplexnet.lattice.base_lattice import BaseLattice
from simplexnet.simplex.states import SimplexState


def copy_tensor(degree: int) -> np.ndarray:
    """Generalized delta: 1 when all ``degree`` indices agree, else 0.

    Free bits never get a projector; counters multiply by two per free bit instead.
    """
    if degree < 1:
        raise NetworkError(f"Copy projector needs at least one leg, got {degree}")
    tensor = np.zeros((2,) * degree)
    tensor[(0,) * degree] = 1.0
    tensor[(1,) * degree] = 1.0
    return tensor


@dataclass(frozen=True, eq=False)
class NetworkSpec:
    """A lattice with one simplex state per simplex and copy projectors at the sites.

    The projector at a site has one leg per incident simplex plus the physical leg.
    """

    lattice: BaseLattice
    simplex_assignment: Tuple[SimplexState, ...]

    def __post_init__(self):
        assignment = tuple(self.simplex_assignment)
        simplices = self.lattice.simplices
        if len(assignment) != len(simplices):
            raise SimplexError(f"Network has {len(simplices)} simplices but {len(assignment)} states were assigned")
        for t, (sites, state) in enumerate(zip(simplices, assignment)):
            if state.arity != len(sites):
                raise SimplexError(f"Simplex {t} on sites {sites} needs arity {len(sites)}, got {state.arity}")
        object.__setattr__(self, "simplex_assignment", assignment)

    @classmethod
    def uniform(cls, lattice: BaseLattice, simplex: SimplexState) -> "NetworkSpec":
        return cls(lattice, tuple(simplex for _ in lattice.simplices))

    @property
    def n_sites(self) -> int:
        return self.lattice.n_sites

    @property
    def normalized(self) -> bool:
        return all(s.normalized for s in self.simplex_assignment)

    def projector_degrees(self) -> np.ndarray:
        return self.lattice.site_degrees()

    def with_simplices(self, simplices: Sequence[SimplexState]) -> "NetworkSpec":
        return NetworkSpec(self.lattice, tuple(simplices))
