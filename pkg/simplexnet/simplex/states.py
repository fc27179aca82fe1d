"""Simplex states and their constructors.

Amplitudes are indexed by the ancilla bitstring, leg 0 being the leftmost bit.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from simplexnet.bits import bits_to_index, index_to_bits, popcount
from simplexnet.errors import SimplexError

logger = logging.getLogger("simplexnet")

SIMPLEX_ARITIES = (3, 4)
FOUR_QUBIT_MULTIPLICITY = np.array([1, 4, 6, 4, 1], dtype=float)


def hamming_weights(arity: int) -> np.ndarray:
    return popcount(np.arange(2 ** arity))


@dataclass(frozen=True, eq=False)
class SimplexState:
    arity: int
    amplitudes: np.ndarray
    label: str = ""
    normalized: bool = True

    def __post_init__(self):
        if self.arity not in SIMPLEX_ARITIES:
            raise SimplexError(f"Simplex arity must be one of {SIMPLEX_ARITIES}, got {self.arity}")
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amplitudes.size != 2 ** self.arity:
            raise SimplexError(f"Arity {self.arity} needs {2 ** self.arity} amplitudes, got {amplitudes.size}")
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise SimplexError("Simplex amplitudes are all zero")
        if self.normalized:
            amplitudes = amplitudes / norm
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    def amplitude(self, bitstring: str) -> complex:
        if len(bitstring) != self.arity:
            raise SimplexError(f"Bitstring {bitstring!r} does not match arity {self.arity}")
        return complex(self.amplitudes[bits_to_index(bitstring)])

    def tensor(self) -> np.ndarray:
        """Amplitudes as a (2,) * arity tensor, axis k = leg k."""
        return self.amplitudes.reshape((2,) * self.arity)

    def support(self, threshold: float = 1e-12) -> List[str]:
        return [index_to_bits(i, self.arity) for i in np.flatnonzero(np.abs(self.amplitudes) > threshold)]

    def overlap(self, other: "SimplexState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def permuted(self, permutation: Sequence[int]) -> "SimplexState":
        """Reorder the legs: new leg k is old leg permutation[k]."""
        if sorted(permutation) != list(range(self.arity)):
            raise SimplexError(f"Invalid leg permutation {permutation}")
        tensor = np.transpose(self.tensor(), permutation)
        return SimplexState(self.arity, tensor.reshape(-1), self.label, self.normalized)

    def with_label(self, label: str) -> "SimplexState":
        return SimplexState(self.arity, self.amplitudes, label, self.normalized)

    def is_close(self, other: "SimplexState", atol: float = 1e-12) -> bool:
        return self.arity == other.arity and np.allclose(self.amplitudes, other.amplitudes, atol=atol)


def _weight_state(arity: int, weight: int, label: str) -> SimplexState:
    return SimplexState(arity, (hamming_weights(arity) == weight).astype(float), label)


def w_state(arity: int = 3) -> SimplexState:
    """Equal superposition of single-excitation strings."""
    return _weight_state(arity, 1, "w" if arity == 3 else f"w{arity}")


def wbar_state(arity: int = 3) -> SimplexState:
    """Bit-flip image of the W state."""
    return _weight_state(arity, arity - 1, "wbar" if arity == 3 else f"wbar{arity}")


def ghz_state(arity: int = 3) -> SimplexState:
    amplitudes = np.zeros(2 ** arity)
    amplitudes[0] = amplitudes[-1] = 1.0
    return SimplexState(arity, amplitudes, "ghz" if arity == 3 else f"ghz{arity}")


def basis_simplex(bitstrings: Iterable[str], label: str = "") -> SimplexState:
    """Equal superposition of the listed ancilla strings."""
    bitstrings = list(bitstrings)
    if not bitstrings:
        raise SimplexError("At least one bitstring is required")
    arity = len(bitstrings[0])
    if any(len(b) != arity for b in bitstrings):
        raise SimplexError("Bitstrings must share one length")
    amplitudes = np.zeros(2 ** arity)
    for bitstring in bitstrings:
        amplitudes[bits_to_index(bitstring)] = 1.0
    return SimplexState(arity, amplitudes, label or "+".join(sorted(set(bitstrings))))


def indicator_simplex(arity: int, bitstrings: Iterable[str], label: str = "indicator") -> SimplexState:
    """Unnormalized 0/1 tensor, 1 on the listed strings."""
    amplitudes = np.zeros(2 ** arity)
    for bitstring in bitstrings:
        if len(bitstring) != arity:
            raise SimplexError(f"Bitstring {bitstring!r} does not match arity {arity}")
        amplitudes[bits_to_index(bitstring)] = 1.0
    return SimplexState(arity, amplitudes, label, normalized=False)


def mix(states: Sequence[Tuple[SimplexState, float]], label: Optional[str] = None) -> SimplexState:
    """Normalized linear combination of simplex states."""
    states = list(states)
    if not states:
        raise SimplexError("mix needs at least one state")
    arities = {s.arity for s, _ in states}
    if len(arities) != 1:
        raise SimplexError(f"Cannot mix simplices of arities {sorted(arities)}")
    weights = np.array([w for _, w in states], dtype=complex)
    if not np.any(weights):
        raise SimplexError("mix weights are all zero")

    combined = sum(w * s.amplitudes for (s, _), w in zip(states, weights))
    if np.linalg.norm(combined) < 1e-15:
        raise SimplexError("mix cancels to the zero vector")
    if label is None:
        label = "+".join(s.label for s, _ in states)
    return SimplexState(arities.pop(), combined, label)


@dataclass(frozen=True)
class SymmetricFourQubit:
    """Exchange-symmetric 4-qubit state, one real coefficient per Hamming weight."""

    coeffs: Tuple[float, float, float, float, float]

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float).reshape(-1)
        if coeffs.size != 5:
            raise SimplexError(f"Symmetric 4-qubit state needs 5 coefficients, got {coeffs.size}")
        norm = np.sqrt(np.sum(FOUR_QUBIT_MULTIPLICITY * coeffs ** 2))
        if norm == 0:
            raise SimplexError("Symmetric coefficients are all zero")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in coeffs / norm))

    def amplitudes(self) -> np.ndarray:
        return np.asarray(self.coeffs)[hamming_weights(4)]

    def to_simplex(self, label: str = "sym4") -> SimplexState:
        return SimplexState(4, self.amplitudes(), label)


def symmetric_four(coeffs: Sequence[float], label: str = "sym4") -> SimplexState:
    return SymmetricFourQubit(tuple(coeffs)).to_simplex(label)


def random_simplex(arity: int, rng: np.random.Generator, real: bool = False) -> SimplexState:
    amplitudes = rng.normal(size=2 ** arity)
    if not real:
        amplitudes = amplitudes + 1j * rng.normal(size=2 ** arity)
    return SimplexState(arity, amplitudes, "random")


def weight_strings(arity: int, weight: int) -> List[str]:
    strings = []
    for ones in combinations(range(arity), weight):
        strings.append("".join("1" if k in ones else "0" for k in range(arity)))
    return sorted(strings)
