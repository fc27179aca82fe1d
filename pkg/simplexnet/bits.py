"""Bitstring helpers.

Site 0 is the leftmost character of a bitstring and the most significant bit
of the basis index.
"""

from typing import Iterator, Sequence, Tuple

import numpy as np


def bits_to_index(bitstring: str) -> int:
    if not bitstring or set(bitstring) - {"0", "1"}:
        raise ValueError(f"Invalid bitstring: {bitstring!r}")
    return int(bitstring, 2)


def index_to_bits(index: int, n_bits: int) -> str:
    return format(int(index), f"0{n_bits}b")


def bit_matrix(indices: np.ndarray, n_bits: int, sites: Sequence[int] = None) -> np.ndarray:
    """Return the (len(indices), len(sites)) matrix of 0/1 values of ``sites``."""
    if sites is None:
        sites = range(n_bits)
    shifts = np.array([n_bits - 1 - s for s in sites], dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    return ((indices[:, None] >> shifts[None, :]) & 1).astype(np.int8)


def local_index(bits: np.ndarray) -> np.ndarray:
    """Combine the columns of a bit matrix into integers, first column most significant."""
    width = bits.shape[1]
    weights = 1 << np.arange(width - 1, -1, -1, dtype=np.int64)
    return bits.astype(np.int64) @ weights


def popcount(indices: np.ndarray) -> np.ndarray:
    indices = np.asarray(indices, dtype=np.int64)
    counts = np.zeros(indices.shape, dtype=np.int64)
    while np.any(indices):
        counts += indices & 1
        indices = indices >> 1
    return counts


def flip_mask(site: int, n_bits: int) -> int:
    return 1 << (n_bits - 1 - site)


def chunk_ranges(total: int, chunk_size: int) -> Iterator[Tuple[int, int]]:
    for start in range(0, total, chunk_size):
        yield start, min(start + chunk_size, total)
