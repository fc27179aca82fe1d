"""Default size caps."""

from simplexnet.errors import CapExceededError

MAX_HAMILTONIAN_SITES = 24
DENSE_DIAGONALIZATION_SITES = 14
MAX_ENUMERATION_SITES = 26
MAX_STATE_SITES = 24
MAX_REGION_SITES = 14
MAX_COVER_BITS = 26
PAIRWISE_MEMORY_CAP = 2 ** 26

# Basis states evaluated per vectorized chunk.
CHUNK_SIZE = 1 << 16


def check_cap(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceededError(what, size, cap)
