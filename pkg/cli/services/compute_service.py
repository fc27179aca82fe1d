"""Single computations behind the contract/eig/entropy/ground/xcover commands."""

import logging
from typing import Optional, Tuple

import numpy as np

from cli.utils.config import CapsConfig
from cli.utils.constants import LATTICE_ALIASES, PATCH_PREFIX
from simplexnet.exactcover.counting import count_solutions_bruteforce, count_solutions_tn
from simplexnet.exactcover.instance import CoverInstance
from simplexnet.formats.lattice_format import LatticeFile, read_lattice
from simplexnet.frustration.manifold import GroundManifold, enumerate_ground
from simplexnet.lattice.base_lattice import Region
from simplexnet.lattice.factory import get_lattice
from simplexnet.lattice.triangular import LatticeGraph
from simplexnet.network.base_contractor import ContractionResult
from simplexnet.network.factory import get_contractor
from simplexnet.network.spec import NetworkSpec
from simplexnet.spectral.couplings import default_couplings
from simplexnet.spectral.density import entropy, partial_trace
from simplexnet.spectral.ground_state import ground_state_small_lambda
from simplexnet.spectral.hamiltonian import HamiltonianSpec, hamiltonian_operator
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")


def load_lattice(value: str) -> LatticeFile:
    """A lattice file path, a built-in name, or "patch:<side>"."""
    if value in LATTICE_ALIASES:
        return LatticeFile(get_lattice(value))
    if value.startswith(PATCH_PREFIX):
        side = value[len(PATCH_PREFIX):]
        if not side.isdigit():
            raise ValueError(f"Invalid patch side in {value!r}")
        return LatticeFile(get_lattice("triangular-patch", side=int(side)))
    return read_lattice(value)


def contract_network(spec: NetworkSpec, method: str, caps: CapsConfig,
                     workers: int = 1) -> Tuple[PureState, ContractionResult]:
    if method == "diagonal":
        contractor = get_contractor(method, workers=workers, max_sites=caps.max_state_sites)
    else:
        contractor = get_contractor(method, memory_cap=caps.pairwise_memory_cap)
    result = contractor.contract(spec)
    logger.info("Contracted %d sites with the %s engine (peak tensor %d)",
                spec.n_sites, contractor.method, result.peak_size)
    return result.state, result


def small_field_ground(lattice_file: LatticeFile, J: float, field: float,
                       caps: CapsConfig) -> Tuple[PureState, float]:
    """Ground state at a small transverse field and its energy."""
    lattice = lattice_file.lattice
    spec = HamiltonianSpec(lattice, couplings=default_couplings(lattice, J), field=field)
    state = ground_state_small_lambda(spec, max_sites=caps.max_hamiltonian_sites,
                                      dense_max_sites=caps.dense_diagonalization_sites)
    vector = np.asarray(state.amplitudes)
    energy = float(np.vdot(vector, hamiltonian_operator(spec, caps.max_hamiltonian_sites).matvec(vector)).real)
    return state, energy


def qubit_chain(n_qubits: int) -> LatticeGraph:
    """Bare chain of sites, used to address the qubits of a state read without its lattice."""
    return LatticeGraph.from_triangles(n_qubits, [], extra_edges=[(i, i + 1) for i in range(n_qubits - 1)])


def region_entropy(state: PureState, sites: Tuple[int, ...], caps: CapsConfig,
                   lattice_file: Optional[LatticeFile] = None) -> float:
    """Entropy of a site set; without a lattice the state's qubits are the sites."""
    if lattice_file is not None:
        lattice = lattice_file.lattice
        if lattice.n_sites != state.n_qubits:
            raise ValueError(f"State has {state.n_qubits} qubits but the lattice has {lattice.n_sites} sites")
    else:
        lattice = qubit_chain(state.n_qubits)
    region = Region(lattice, sites)
    return entropy(partial_trace(state, region, caps.max_region_sites))


def ground_manifold(lattice_file: LatticeFile, caps: CapsConfig, workers: int = 1) -> GroundManifold:
    return enumerate_ground(lattice_file.lattice, max_sites=caps.max_enumeration_sites, workers=workers)


def count_cover(instance: CoverInstance, method: str, caps: CapsConfig, workers: int = 1) -> int:
    if method == "tn":
        return count_solutions_tn(instance, caps.max_cover_bits, caps.pairwise_memory_cap)
    elif method == "brute":
        return count_solutions_bruteforce(instance, caps.max_cover_bits, workers=workers)
    raise ValueError(f"Unsupported counting method: {method}")
