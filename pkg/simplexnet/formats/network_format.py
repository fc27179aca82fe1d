"""Network files: a lattice file plus simplex definitions and one `a <label>` line per up-triangle.

Labels with no `s`/`sym4` definition in the file are looked up in the simplex catalog.
"""

from typing import Dict, List

from simplexnet.errors import FormatError, SimplexNetError
from simplexnet.formats.lattice_format import format_lattice, parse_lattice
from simplexnet.formats.lines import directive_lines, read_text, write_text
from simplexnet.formats.simplex_format import SIMPLEX_TAGS, format_simplex, parse_simplex_line
from simplexnet.network.spec import NetworkSpec
from simplexnet.simplex.catalog import get_simplex
from simplexnet.simplex.states import SimplexState


def parse_network(text: str) -> NetworkSpec:
    lattice = parse_lattice(text, extra_tags=SIMPLEX_TAGS + ("a",)).lattice

    defined: Dict[str, SimplexState] = {}
    assignment: List[SimplexState] = []
    last_line = 0
    for number, tag, fields in directive_lines(text):
        last_line = number
        if tag in SIMPLEX_TAGS:
            simplex = parse_simplex_line(tag, fields, number)
            if simplex.label in defined:
                raise FormatError(f"simplex label {simplex.label!r} defined twice", number)
            defined[simplex.label] = simplex
        elif tag == "a":
            if len(fields) != 1:
                raise FormatError("assignment line takes exactly one simplex label", number)
            label = fields[0]
            if label in defined:
                assignment.append(defined[label])
                continue
            try:
                assignment.append(get_simplex(label))
            except ValueError:
                raise FormatError(f"simplex label {label!r} is neither defined nor in the catalog", number) from None

    try:
        return NetworkSpec(lattice, tuple(assignment))
    except SimplexNetError as e:
        raise FormatError(str(e), last_line) from e


def format_network(spec: NetworkSpec) -> str:
    lines = [format_lattice(spec.lattice).rstrip("\n")]
    written = set()
    for simplex in spec.simplex_assignment:
        if simplex.label not in written:
            lines.append(format_simplex(simplex))
            written.add(simplex.label)
    lines += [f"a {s.label or 'unnamed'}" for s in spec.simplex_assignment]
    return "\n".join(lines) + "\n"


def read_network(path: str) -> NetworkSpec:
    return parse_network(read_text(path))


def write_network(path: str, spec: NetworkSpec) -> None:
    write_text(path, format_network(spec))
