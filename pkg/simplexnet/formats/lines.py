"""Shared tokenizer for the line-oriented text formats."""

from typing import Iterator, List, Optional, Sequence, Tuple

from simplexnet.errors import FormatError


def directive_lines(text: str) -> Iterator[Tuple[int, str, List[str]]]:
    """Yield (line number, tag, fields) for every non-blank line; '#' starts a comment."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *fields = line.split()
        yield number, tag, fields


def parse_ints(fields: Sequence[str], line_number: int, count: Optional[int] = None,
               what: str = "values") -> Tuple[int, ...]:
    if count is not None and len(fields) != count:
        raise FormatError(f"expected {count} {what}, got {len(fields)}", line_number)
    try:
        return tuple(int(f) for f in fields)
    except ValueError:
        raise FormatError(f"{what} must be integers: {' '.join(fields)}", line_number) from None


def parse_complex(token: str, line_number: int) -> complex:
    try:
        return complex(token)
    except ValueError:
        raise FormatError(f"not a number: {token!r}", line_number) from None


def format_complex(value: complex) -> str:
    value = complex(value)
    if value.imag == 0:
        return repr(value.real)
    return f"{value.real!r}{value.imag:+}j"


def read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
