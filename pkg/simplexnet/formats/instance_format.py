"""Exact Cover instances, DIMACS-like: `p ec <n_bits> <n_clauses>` then `c <i> <j> <k>` lines."""

from typing import List, Optional, Tuple

from simplexnet.errors import CoverInstanceError, FormatError
from simplexnet.exactcover.instance import CoverInstance
from simplexnet.formats.lines import directive_lines, parse_ints, read_text, write_text


def parse_instance(text: str) -> CoverInstance:
    header: Optional[Tuple[int, int]] = None
    clauses: List[Tuple[int, ...]] = []
    last_line = 0
    for number, tag, fields in directive_lines(text):
        last_line = number
        if tag == "p":
            if header is not None:
                raise FormatError("problem line given twice", number)
            if not fields or fields[0] != "ec":
                raise FormatError("problem line must read 'p ec <n_bits> <n_clauses>'", number)
            header = parse_ints(fields[1:], number, 2, "problem sizes")
        elif tag == "c":
            if header is None:
                raise FormatError("clause before the problem line", number)
            clauses.append(parse_ints(fields, number, 3, "clause bits"))
        else:
            raise FormatError(f"unknown directive {tag!r}", number)

    if header is None:
        raise FormatError("missing problem line 'p ec <n_bits> <n_clauses>'")
    n_bits, n_clauses = header
    if len(clauses) != n_clauses:
        raise FormatError(f"problem line announces {n_clauses} clauses, found {len(clauses)}", last_line)
    try:
        return CoverInstance(n_bits, tuple(clauses))
    except CoverInstanceError as e:
        raise FormatError(str(e), last_line) from e


def format_instance(instance: CoverInstance) -> str:
    lines = [f"p ec {instance.n_bits} {len(instance.clauses)}"]
    lines += [f"c {i} {j} {k}" for i, j, k in instance.clauses]
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> CoverInstance:
    return parse_instance(read_text(path))


def write_instance(path: str, instance: CoverInstance) -> None:
    write_text(path, format_instance(instance))
