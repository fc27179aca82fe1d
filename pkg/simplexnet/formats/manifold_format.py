"""Ground manifold listings: header `M=<count> E0=<energy>` then one bitstring per line."""

from typing import NamedTuple, Tuple

from simplexnet.errors import FormatError
from simplexnet.formats.lines import read_text, write_text
from simplexnet.frustration.manifold import GroundManifold


class ManifoldListing(NamedTuple):
    energy: float
    configurations: Tuple[str, ...]

    @property
    def degeneracy(self) -> int:
        return len(self.configurations)


def format_manifold(manifold: GroundManifold) -> str:
    lines = [f"M={manifold.degeneracy} E0={manifold.energy!r}"]
    lines += list(manifold.configurations)
    return "\n".join(lines) + "\n"


def parse_manifold(text: str) -> ManifoldListing:
    lines = [line.strip() for line in text.splitlines()]
    if not lines or not lines[0]:
        raise FormatError("missing 'M=<count> E0=<energy>' header", 1)
    try:
        fields = dict(part.split("=", 1) for part in lines[0].split())
        count, energy = int(fields["M"]), float(fields["E0"])
    except (KeyError, ValueError):
        raise FormatError("header must read 'M=<count> E0=<energy>'", 1) from None

    configurations = []
    for number, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise FormatError(f"bad bitstring {line!r}", number)
        configurations.append(line)
    if len(configurations) != count:
        raise FormatError(f"header announces {count} configurations, found {len(configurations)}")
    return ManifoldListing(energy, tuple(configurations))


def read_manifold(path: str) -> ManifoldListing:
    return parse_manifold(read_text(path))


def write_manifold(path: str, manifold: GroundManifold) -> None:
    write_text(path, format_manifold(manifold))
