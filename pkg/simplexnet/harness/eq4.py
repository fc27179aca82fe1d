"""Ground state of the side-2 triangular patch at vanishing transverse field.

The patch has six sites and up-triangles (0, 1, 2), (1, 3, 4), (2, 4, 5) with plain edge
couplings. Its manifold holds 26 configurations, 13 with site 0 down.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from simplexnet.bits import bits_to_index
from simplexnet.frustration.manifold import WStructureReport, enumerate_ground, verify_w_structure
from simplexnet.lattice.triangular import build_triangular_patch
from simplexnet.spectral.ground_state import degenerate_pt_ground, ground_state_small_lambda
from simplexnet.spectral.hamiltonian import HamiltonianSpec
from simplexnet.spectral.state import PureState

logger = logging.getLogger("simplexnet")

# Site-0-down basis states, grouped by shared coefficient.
LISTED_STATES: Dict[str, Tuple[str, ...]] = {
    "a": ("001100", "010001", "011101"),
    "b": ("001101", "010011", "001110", "010101", "011001", "011100"),
    "c": ("001010", "010010", "011000"),
    "d": ("011010",),
}
LISTED_COEFFICIENTS: Dict[str, float] = {"a": -0.24, "b": 0.19, "c": -0.16, "d": 0.15}
LISTED_COUNT = sum(len(v) for v in LISTED_STATES.values())
# Class index expected for each group, largest magnitude first.
GROUP_RANK: Dict[str, int] = {
    group: rank for rank, group in enumerate(sorted(LISTED_COEFFICIENTS, key=lambda g: -abs(LISTED_COEFFICIENTS[g])))
}
LATTICE_NAME = "patch:2"
MAGNITUDE_TOLERANCE = 0.02
SUPPORT_THRESHOLD = 1e-2


@dataclass(frozen=True)
class MagnitudeClass:
    magnitude: float
    configurations: Tuple[str, ...]
    signs: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.configurations)


@dataclass(frozen=True)
class ListedStateCheck:
    bitstring: str
    group: str
    reference: float
    amplitude: float
    in_manifold: bool
    class_index: Optional[int]


def magnitude_classes(state: PureState, configurations: Tuple[str, ...],
                      separation: float = 1e-3) -> Tuple[MagnitudeClass, ...]:
    """Group configurations by amplitude magnitude, splitting where sorted magnitudes jump by more than ``separation``."""
    values = {c: state.amplitude(c).real for c in configurations}
    ordered = sorted(configurations, key=lambda c: (-abs(values[c]), c))
    groups: List[List[str]] = []
    for config in ordered:
        if groups and abs(abs(values[groups[-1][-1]]) - abs(values[config])) <= separation:
            groups[-1].append(config)
        else:
            groups.append([config])
    return tuple(
        MagnitudeClass(
            magnitude=float(np.mean([abs(values[c]) for c in group])),
            configurations=tuple(sorted(group)),
            signs=tuple(sorted({int(np.sign(values[c])) for c in group})),
        )
        for group in groups
    )


@dataclass(frozen=True, eq=False)
class SixSiteReport:
    field: float
    small_field_state: PureState
    perturbative_state: PureState
    overlap: float
    manifold: Tuple[str, ...]
    manifold_energy: float
    classes: Tuple[MagnitudeClass, ...]
    listed: Tuple[ListedStateCheck, ...]
    parity_signs: bool
    w_structure: WStructureReport

    def magnitude_residual(self) -> Optional[float]:
        """Largest gap to the reference magnitudes when the class count matches."""
        if len(self.classes) != len(LISTED_COEFFICIENTS):
            return None
        reference = sorted((abs(v) for v in LISTED_COEFFICIENTS.values()), reverse=True)
        return max(abs(c.magnitude - p) for c, p in zip(self.classes, reference))

    def groups_match(self) -> bool:
        """Every listed state sits in the class whose rank matches its group's coefficient."""
        return all(c.class_index == GROUP_RANK[c.group] for c in self.listed)

    def deviations(self) -> List[str]:
        notes = []
        if len(self.classes) != len(LISTED_COEFFICIENTS):
            notes.append(f"{len(self.classes)} magnitude classes instead of {len(LISTED_COEFFICIENTS)}")
        residual = self.magnitude_residual()
        if residual is not None and residual > MAGNITUDE_TOLERANCE:
            notes.append(f"class magnitudes differ from the reference ones by up to {residual:.4f}")
        outside = [c.bitstring for c in self.listed if not c.in_manifold]
        if outside:
            notes.append(f"listed states outside the classical ground manifold: {', '.join(outside)}")
        misplaced = [c.bitstring for c in self.listed if c.in_manifold and c.class_index != GROUP_RANK[c.group]]
        if misplaced:
            notes.append(f"listed states in a class other than their group's: {', '.join(misplaced)}")
        if len(self.sector) != LISTED_COUNT:
            notes.append(f"site-0-down sector holds {len(self.sector)} states, the listing {LISTED_COUNT}")
        return notes

    @property
    def sector(self) -> Tuple[str, ...]:
        return tuple(c for c in self.manifold if c[0] == "0")

    def to_text(self) -> str:
        residual = self.magnitude_residual()
        lines = [
            f"lattice: {LATTICE_NAME}",
            f"field: {self.field:g}",
            f"manifold_size: {len(self.manifold)}",
            f"sector_size: {len(self.sector)}",
            f"manifold_energy: {self.manifold_energy:g}",
            f"overlap_small_field_vs_perturbative: {self.overlap:.6f}",
            f"w_structure: {self.w_structure.summary()}",
            f"sign_follows_weight_parity: {self.parity_signs}",
            f"magnitude_residual: {'n/a' if residual is None else f'{residual:.4f}'}",
            f"groups_match: {self.groups_match()}",
            "",
            "magnitude classes (magnitude, size, signs, configurations):",
        ]
        for c in self.classes:
            signs = ",".join(f"{s:+d}" for s in c.signs)
            lines.append(f"  {c.magnitude:.4f}  {c.size:2d}  {signs}  {' '.join(c.configurations)}")
        lines += ["", "listed states (bitstring, group, reference, computed, in_manifold):"]
        for c in self.listed:
            lines.append(f"  {c.bitstring}  {c.group}  {c.reference:+.2f}  {c.amplitude:+.4f}  {c.in_manifold}")
        lines += ["", "deviations:"]
        lines += [f"  - {note}" for note in self.deviations()] or ["  none"]
        return "\n".join(lines) + "\n"


def run_eq4(field: float = 1e-3, class_separation: float = 1e-3) -> SixSiteReport:
    lattice = build_triangular_patch(2)
    spec = HamiltonianSpec(lattice, field=field)
    manifold = enumerate_ground(lattice)

    small_field = ground_state_small_lambda(spec)
    perturbative = degenerate_pt_ground(spec, manifold)
    overlap = abs(small_field.overlap(perturbative))
    perturbative = perturbative.align_phase(small_field)

    classes = magnitude_classes(small_field, manifold.configurations, class_separation)
    class_of = {c: index for index, cls in enumerate(classes) for c in cls.configurations}
    members = set(manifold.configurations)
    listed = tuple(
        ListedStateCheck(bitstring, group, LISTED_COEFFICIENTS[group],
                         small_field.amplitude(bitstring).real, bitstring in members, class_of.get(bitstring))
        for group, states in LISTED_STATES.items() for bitstring in states
    )
    parity = {
        int(np.sign(small_field.amplitude(c).real)) * (-1) ** bin(bits_to_index(c)).count("1")
        for c in manifold.configurations
    }

    report = SixSiteReport(
        field=field,
        small_field_state=small_field,
        perturbative_state=perturbative,
        overlap=overlap,
        manifold=manifold.configurations,
        manifold_energy=manifold.energy,
        classes=classes,
        listed=listed,
        parity_signs=len(parity) == 1,
        w_structure=verify_w_structure(small_field, lattice, threshold=SUPPORT_THRESHOLD),
    )
    for note in report.deviations():
        logger.warning("Side-2 patch ground state: %s", note)
    logger.info("Side-2 patch ground state: %d classes, overlap %.6f", len(classes), overlap)
    return report
