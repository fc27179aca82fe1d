"""Argument parsing helpers."""

from typing import List, Tuple


def parse_int_list(text: str, what: str = "values") -> List[int]:
    """Parse a comma-separated list of integers such as "3,4,5"."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError(f"No {what} given")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValueError(f"Invalid {what}: {text!r}") from None


def parse_region(text: str) -> Tuple[int, ...]:
    sites = parse_int_list(text, "region sites")
    if len(set(sites)) != len(sites):
        raise ValueError(f"Region lists a site twice: {text!r}")
    return tuple(sites)


def parse_label_list(text: str) -> List[str]:
    labels = [item.strip() for item in text.split(",") if item.strip()]
    if not labels:
        raise ValueError("No simplex labels given")
    return labels
