"""Exception hierarchy shared by the simplexnet packages.

Every domain error is a ``ValueError`` so callers that treat invalid input the
usual way keep working.
"""


class SimplexNetError(ValueError):
    """Base class for invalid input or unsatisfiable requests."""


class LatticeError(SimplexNetError):
    pass


class RegionError(SimplexNetError):
    pass


class SimplexError(SimplexNetError):
    pass


class StateError(SimplexNetError):
    pass


class CapExceededError(SimplexNetError):
    """A problem size is above its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NetworkError(SimplexNetError):
    """A tensor network cannot be assembled as requested."""


class EmptyNetworkError(SimplexNetError):
    """All contracted amplitudes vanish."""


class ContractionOrderError(SimplexNetError):
    pass


class ContractionMemoryError(SimplexNetError):
    """An intermediate tensor would exceed the memory cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"Intermediate tensor of {size} elements exceeds memory cap {cap}")
        self.size = size
        self.cap = cap


class DegenerateGroundStateError(SimplexNetError):
    pass


class EmptyManifoldError(SimplexNetError):
    pass


class CoverInstanceError(SimplexNetError):
    pass


class FormatError(SimplexNetError):
    """Malformed input file."""

    def __init__(self, message: str, line_number: int = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
