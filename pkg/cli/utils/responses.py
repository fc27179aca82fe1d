"""Output formatting utilities."""

import sys
from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd
from rich.console import Console
from rich.table import Table

from cli.utils.constants import CSV_DECIMALS, ENTROPY_COLUMNS, REPORT_DECIMALS
from simplexnet.harness.provenance import header_lines

console = Console(stderr=True)


def format_value(value: float, decimals: int = REPORT_DECIMALS) -> str:
    return f"{value:.{decimals}f}"


def format_frame(frame: pd.DataFrame, decimals: int = CSV_DECIMALS) -> pd.DataFrame:
    """Entropy-like columns rendered with a fixed number of decimals; empty where missing."""
    formatted = frame.copy()
    for column in ENTROPY_COLUMNS:
        if column in formatted.columns:
            formatted[column] = formatted[column].map(
                lambda v: "" if v is None or pd.isna(v) else f"{v:.{decimals}f}")
    return formatted


def write_text_output(path: Optional[str], text: str, header: Optional[Dict[str, str]] = None) -> None:
    lines = header_lines(header) if header else []
    content = "\n".join(lines + [text.rstrip("\n")]) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
    else:
        sys.stdout.write(content)


def write_frame_output(path: Optional[str], frame: pd.DataFrame, header: Optional[Dict[str, str]] = None) -> None:
    formatted = format_frame(frame)
    if path:
        with open(path, "w", encoding="utf-8", newline="") as f:
            for line in header_lines(header) if header else []:
                f.write(line + "\n")
            formatted.to_csv(f, index=False)
    else:
        for line in header_lines(header) if header else []:
            sys.stdout.write(line + "\n")
        formatted.to_csv(sys.stdout, index=False)


def print_summary(title: str, columns: Sequence[str], rows: Iterable[Sequence]) -> None:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(str(value) for value in row))
    console.print(table)


def summary_rows(frame: pd.DataFrame, columns: List[str], limit: int = 20) -> List[List[str]]:
    formatted = format_frame(frame)
    return formatted[columns].head(limit).astype(str).values.tolist()
