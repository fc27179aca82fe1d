"""Lattice files.

    n <n_sites>
    k <kind>                 optional, defaults to explicit
    c <row> <col>            optional site coordinates, one per site in order
    t <i> <j> <k>            one per up-triangle
    e <i> <j>                bare edges outside every triangle
    r <i> <j> ...            regions
"""

from typing import List, NamedTuple, Optional, Tuple

from simplexnet.errors import FormatError, SimplexNetError
from simplexnet.formats.lines import directive_lines, parse_ints, read_text, write_text
from simplexnet.lattice.base_lattice import Region, simplex_edges
from simplexnet.lattice.triangular import LATTICE_KINDS, LatticeGraph

LATTICE_TAGS = ("n", "k", "c", "t", "e", "r")


class LatticeFile(NamedTuple):
    lattice: LatticeGraph
    regions: Tuple[Region, ...] = ()


def parse_lattice(text: str, extra_tags: Tuple[str, ...] = ()) -> LatticeFile:
    n_sites: Optional[int] = None
    kind = "explicit"
    coordinates: List[Tuple[int, int]] = []
    triangles: List[Tuple[int, ...]] = []
    edges: List[Tuple[int, ...]] = []
    regions: List[Tuple[int, Tuple[int, ...]]] = []

    for number, tag, fields in directive_lines(text):
        if tag in extra_tags:
            continue
        if n_sites is None and tag != "n":
            raise FormatError("lattice file must start with 'n <n_sites>'", number)
        if tag == "n":
            if n_sites is not None:
                raise FormatError("site count given twice", number)
            (n_sites,) = parse_ints(fields, number, 1, "site count")
        elif tag == "k":
            if len(fields) != 1 or fields[0] not in LATTICE_KINDS:
                raise FormatError(f"lattice kind must be one of {LATTICE_KINDS}", number)
            kind = fields[0]
        elif tag == "c":
            coordinates.append(parse_ints(fields, number, 2, "coordinates"))
        elif tag == "t":
            triangles.append(parse_ints(fields, number, 3, "triangle sites"))
        elif tag == "e":
            edges.append(parse_ints(fields, number, 2, "edge sites"))
        elif tag == "r":
            if not fields:
                raise FormatError("region needs at least one site", number)
            regions.append((number, parse_ints(fields, number, what="region sites")))
        else:
            raise FormatError(f"unknown directive {tag!r}", number)

    if n_sites is None:
        raise FormatError("lattice file is empty")
    lattice = LatticeGraph.from_triangles(n_sites, triangles, kind=kind, extra_edges=edges,
                                          coordinates=coordinates or None)
    parsed_regions = []
    for number, sites in regions:
        try:
            parsed_regions.append(Region(lattice, sites))
        except SimplexNetError as e:
            raise FormatError(str(e), number) from e
    return LatticeFile(lattice, tuple(parsed_regions))


def format_lattice(lattice: LatticeGraph, regions: Tuple[Region, ...] = ()) -> str:
    lines = [f"n {lattice.n_sites}"]
    if lattice.kind != "explicit":
        lines.append(f"k {lattice.kind}")
    for row, col in lattice.coordinates or ():
        lines.append(f"c {row} {col}")
    lines += [f"t {i} {j} {k}" for i, j, k in lattice.up_triangles]
    covered = {e for t in lattice.up_triangles for e in simplex_edges(t)}
    lines += [f"e {i} {j}" for i, j in lattice.edges if (i, j) not in covered]
    lines += ["r " + " ".join(str(s) for s in region.sites) for region in regions]
    return "\n".join(lines) + "\n"


def read_lattice(path: str) -> LatticeFile:
    return parse_lattice(read_text(path))


def write_lattice(path: str, lattice: LatticeGraph, regions: Tuple[Region, ...] = ()) -> None:
    write_text(path, format_lattice(lattice, regions))
