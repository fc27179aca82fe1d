"""Simplex definitions.

    s <arity> <label> <amplitude> ...     2^arity real or complex amplitudes
    sym4 <a0> <a1> <a2> <a3> <a4>         exchange-symmetric 4-qubit shorthand, label "sym4"
"""

from typing import Dict, Iterable, List

from simplexnet.errors import FormatError, SimplexNetError
from simplexnet.formats.lines import directive_lines, format_complex, parse_complex, read_text, write_text
from simplexnet.simplex.states import SimplexState, symmetric_four

SIMPLEX_TAGS = ("s", "sym4")


def parse_simplex_line(tag: str, fields: List[str], line_number: int) -> SimplexState:
    try:
        if tag == "sym4":
            if len(fields) != 5:
                raise FormatError(f"sym4 needs 5 coefficients, got {len(fields)}", line_number)
            return symmetric_four([parse_complex(f, line_number).real for f in fields])
        if len(fields) < 2:
            raise FormatError("simplex line needs an arity and a label", line_number)
        try:
            arity = int(fields[0])
        except ValueError:
            raise FormatError(f"arity must be an integer: {fields[0]!r}", line_number) from None
        amplitudes = [parse_complex(f, line_number) for f in fields[2:]]
        return SimplexState(arity, amplitudes, fields[1])
    except FormatError:
        raise
    except SimplexNetError as e:
        raise FormatError(str(e), line_number) from e


def parse_simplices(text: str) -> Dict[str, SimplexState]:
    simplices: Dict[str, SimplexState] = {}
    for number, tag, fields in directive_lines(text):
        if tag not in SIMPLEX_TAGS:
            raise FormatError(f"unknown directive {tag!r}", number)
        simplex = parse_simplex_line(tag, fields, number)
        if simplex.label in simplices:
            raise FormatError(f"simplex label {simplex.label!r} defined twice", number)
        simplices[simplex.label] = simplex
    return simplices


def format_simplex(simplex: SimplexState) -> str:
    label = simplex.label or "unnamed"
    amplitudes = " ".join(format_complex(a) for a in simplex.amplitudes)
    return f"s {simplex.arity} {label} {amplitudes}"


def format_simplices(simplices: Iterable[SimplexState]) -> str:
    return "\n".join(format_simplex(s) for s in simplices) + "\n"


def read_simplices(path: str) -> Dict[str, SimplexState]:
    return parse_simplices(read_text(path))


def write_simplices(path: str, simplices: Iterable[SimplexState]) -> None:
    write_text(path, format_simplices(simplices))
