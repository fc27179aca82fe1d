import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from simplexnet.bits import bits_to_index, index_to_bits
from simplexnet.errors import StateError

logger = logging.getLogger("simplexnet")

NORM_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense amplitude vector over n qubits in the computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if self.n_qubits < 1 or amplitudes.size != 2 ** self.n_qubits:
            raise StateError(f"{self.n_qubits} qubits need {2 ** max(self.n_qubits, 0)} amplitudes, "
                             f"got {amplitudes.size}")
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise StateError(f"State norm {norm:.3e} differs from 1")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def from_amplitudes(cls, amplitudes: np.ndarray) -> "PureState":
        """Normalize and wrap a raw amplitude vector."""
        amplitudes = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n_qubits = amplitudes.size.bit_length() - 1
        if amplitudes.size < 2 or 2 ** n_qubits != amplitudes.size:
            raise StateError(f"Amplitude vector length {amplitudes.size} is not a power of two")
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise StateError("Cannot normalize the zero vector")
        return cls(n_qubits, amplitudes / norm)

    @classmethod
    def basis(cls, bitstring: str) -> "PureState":
        amplitudes = np.zeros(2 ** len(bitstring), dtype=complex)
        amplitudes[bits_to_index(bitstring)] = 1.0
        return cls(len(bitstring), amplitudes)

    @classmethod
    def from_mapping(cls, n_qubits: int, mapping: Mapping[str, complex]) -> "PureState":
        amplitudes = np.zeros(2 ** n_qubits, dtype=complex)
        for bitstring, value in mapping.items():
            if len(bitstring) != n_qubits:
                raise StateError(f"Bitstring {bitstring!r} does not have {n_qubits} bits")
            amplitudes[bits_to_index(bitstring)] = value
        return cls.from_amplitudes(amplitudes)

    def amplitude(self, bitstring: str) -> complex:
        if len(bitstring) != self.n_qubits:
            raise StateError(f"Bitstring {bitstring!r} does not have {self.n_qubits} bits")
        return complex(self.amplitudes[bits_to_index(bitstring)])

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def support_indices(self, threshold: float = 1e-10) -> np.ndarray:
        return np.flatnonzero(np.abs(self.amplitudes) > threshold)

    def support(self, threshold: float = 1e-10) -> List[str]:
        return [index_to_bits(i, self.n_qubits) for i in self.support_indices(threshold)]

    def nonzero_items(self, threshold: float = 0.0) -> List[Tuple[str, complex]]:
        return [(index_to_bits(i, self.n_qubits), complex(self.amplitudes[i]))
                for i in self.support_indices(threshold)]

    def as_dict(self, threshold: float = 1e-10) -> Dict[str, complex]:
        return dict(self.nonzero_items(threshold))

    def overlap(self, other: "PureState") -> complex:
        """<self|other>."""
        if other.n_qubits != self.n_qubits:
            raise StateError("States act on different numbers of qubits")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: "PureState") -> float:
        return abs(self.overlap(other)) ** 2

    def align_phase(self, reference: Optional["PureState"] = None) -> "PureState":
        """Fix the global phase.

        Without a reference the largest-magnitude amplitude (first on ties) is made
        real positive; with one, the overlap with the reference is made real positive.
        """
        if reference is None:
            pivot = self.amplitudes[int(np.argmax(np.abs(self.amplitudes)))]
        else:
            pivot = np.conj(self.overlap(reference))
        if abs(pivot) == 0:
            return self
        return PureState(self.n_qubits, self.amplitudes * (abs(pivot) / pivot))

    def max_deviation(self, other: "PureState") -> float:
        """Largest per-amplitude difference after aligning ``other`` to this state."""
        aligned = other.align_phase(self)
        return float(np.max(np.abs(self.amplitudes - aligned.amplitudes)))
