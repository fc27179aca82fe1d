"""Model counting for Exact Cover: tensor network and exhaustive oracle."""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from simplexnet.bits import bit_matrix, chunk_ranges
from simplexnet.exactcover.instance import CoverInstance
from simplexnet.lattice.triangular import LatticeGraph
from simplexnet.limits import CHUNK_SIZE, MAX_COVER_BITS, PAIRWISE_MEMORY_CAP, check_cap
from simplexnet.network.pairwise_contractor import PairwiseContractor
from simplexnet.network.planner import plan_order
from simplexnet.network.spec import NetworkSpec
from simplexnet.simplex.states import indicator_simplex, weight_strings

logger = logging.getLogger("simplexnet")


def clause_tensor():
    """0/1 tensor accepting exactly one 1 among three bits."""
    return indicator_simplex(3, weight_strings(3, 1), label="exact-one")


def count_solutions_tn(instance: CoverInstance, max_bits: int = MAX_COVER_BITS,
                       memory_cap: int = PAIRWISE_MEMORY_CAP) -> int:
    """Sum of the closed clause network; each bit in no clause doubles the count."""
    check_cap("Instance", instance.n_bits, max_bits)
    if not instance.clauses:
        return 2 ** instance.n_bits

    used = instance.used_bits
    position = {bit: k for k, bit in enumerate(used)}
    lattice = LatticeGraph.from_triangles(len(used), [tuple(position[b] for b in c) for c in instance.clauses])
    spec = NetworkSpec.uniform(lattice, clause_tensor())

    order = plan_order(spec, open_physical=False)
    result = PairwiseContractor(memory_cap=memory_cap, open_physical=False).contract(spec, order)
    count = int(round(result.total.real)) * 2 ** instance.free_bits
    logger.info("Tensor-network count %d for %d bits and %d clauses (peak tensor %d)",
                count, instance.n_bits, len(instance.clauses), result.peak_size)
    return count


def _count_chunk(instance: CoverInstance, start: int, stop: int) -> int:
    bits = bit_matrix(np.arange(start, stop, dtype=np.int64), instance.n_bits)
    satisfied = np.ones(stop - start, dtype=bool)
    for clause in instance.clauses:
        satisfied &= bits[:, list(clause)].sum(axis=1) == 1
    return int(satisfied.sum())


def count_solutions_bruteforce(instance: CoverInstance, max_bits: int = MAX_COVER_BITS,
                               chunk_size: int = CHUNK_SIZE, workers: int = 1) -> int:
    check_cap("Instance", instance.n_bits, max_bits)
    ranges = list(chunk_ranges(2 ** instance.n_bits, chunk_size))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda r: _count_chunk(instance, *r), ranges))
    else:
        counts = [_count_chunk(instance, start, stop) for start, stop in ranges]
    return sum(counts)
