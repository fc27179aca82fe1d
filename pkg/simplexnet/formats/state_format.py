"""State CSV files: `bitstring,re,im` rows for the nonzero amplitudes, after optional `#` header lines."""

from typing import Dict, Optional

import pandas as pd

from simplexnet.errors import FormatError, StateError
from simplexnet.spectral.state import PureState

STATE_COLUMNS = ["bitstring", "re", "im"]


def state_frame(state: PureState, threshold: float = 0.0) -> pd.DataFrame:
    items = state.nonzero_items(threshold)
    return pd.DataFrame(
        [(bits, float(value.real), float(value.imag)) for bits, value in items],
        columns=STATE_COLUMNS,
    )


def write_state(path: str, state: PureState, header: Optional[Dict[str, str]] = None,
                threshold: float = 0.0) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        for key, value in (header or {}).items():
            f.write(f"# {key}: {value}\n")
        state_frame(state, threshold).to_csv(f, index=False)


def read_state(path: str, n_qubits: Optional[int] = None) -> PureState:
    frame = pd.read_csv(path, comment="#", dtype={"bitstring": str})
    if list(frame.columns) != STATE_COLUMNS:
        raise FormatError(f"state file columns must be {','.join(STATE_COLUMNS)}, got {','.join(frame.columns)}")
    if frame.empty:
        raise FormatError("state file has no amplitudes")

    widths = frame["bitstring"].str.len()
    width = n_qubits or int(widths.iloc[0])
    for row, (bits, size) in enumerate(zip(frame["bitstring"], widths)):
        if size != width or set(bits) - {"0", "1"}:
            raise FormatError(f"bad bitstring {bits!r}", row + 2)
    if frame["bitstring"].duplicated().any():
        raise FormatError("bitstrings must be unique")

    mapping = {bits: complex(re, im) for bits, re, im in frame.itertuples(index=False)}
    try:
        return PureState.from_mapping(width, mapping)
    except StateError as e:
        raise FormatError(str(e)) from e
