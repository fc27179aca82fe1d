from dataclasses import dataclass
from math import comb
from typing import Sequence, Tuple

import numpy as np

from simplexnet.errors import CoverInstanceError
from simplexnet.lattice.base_lattice import BaseLattice

Clause = Tuple[int, int, int]


@dataclass(frozen=True)
class CoverInstance:
    """Three-bit clauses, each satisfied when exactly one of its bits is 1."""

    n_bits: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        if self.n_bits < 1:
            raise CoverInstanceError("Instance needs at least one bit")
        seen = set()
        clauses = []
        for clause in self.clauses:
            clause = tuple(int(b) for b in clause)
            if len(clause) != 3 or len(set(clause)) != 3:
                raise CoverInstanceError(f"Clause {clause} must name three distinct bits")
            if min(clause) < 0 or max(clause) >= self.n_bits:
                raise CoverInstanceError(f"Clause {clause} references a bit outside 0..{self.n_bits - 1}")
            key = frozenset(clause)
            if key in seen:
                raise CoverInstanceError(f"Duplicate clause {clause}")
            seen.add(key)
            clauses.append(clause)
        object.__setattr__(self, "clauses", tuple(clauses))

    @property
    def used_bits(self) -> Tuple[int, ...]:
        return tuple(sorted({b for clause in self.clauses for b in clause}))

    @property
    def free_bits(self) -> int:
        return self.n_bits - len(self.used_bits)

    def with_clause(self, clause: Sequence[int]) -> "CoverInstance":
        return CoverInstance(self.n_bits, self.clauses + (tuple(clause),))


def lattice_to_instance(lattice: BaseLattice) -> CoverInstance:
    """One clause per up-triangle, bits = sites."""
    return CoverInstance(lattice.n_sites, tuple(t for t in lattice.simplices if len(t) == 3))


def random_instance(n_bits: int, n_clauses: int, seed: int) -> CoverInstance:
    if n_bits < 3:
        raise CoverInstanceError("Random instances need at least three bits")
    if n_clauses > comb(n_bits, 3):
        raise CoverInstanceError(f"{n_bits} bits admit at most {comb(n_bits, 3)} distinct clauses")
    rng = np.random.default_rng(seed)
    seen = set()
    clauses = []
    while len(clauses) < n_clauses:
        clause = tuple(sorted(int(b) for b in rng.choice(n_bits, size=3, replace=False)))
        if clause not in seen:
            seen.add(clause)
            clauses.append(clause)
    return CoverInstance(n_bits, tuple(clauses))
