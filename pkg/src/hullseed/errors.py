"""Exception types shared across the toolkit.

Two families matter to the CLI exit-code mapping: DataError (bad or missing
input files) and AlgorithmError (a computation cannot proceed on otherwise
well-formed data).
"""


class HullseedError(Exception):
    """Base class for all toolkit errors."""


class DataError(HullseedError):
    """Input files are missing or malformed."""


class AlgorithmError(HullseedError):
    """A computation cannot proceed on the given (well-formed) input."""


class DegenerateInput(AlgorithmError):
    """Input too small or too flat for the requested operation."""


class DimensionError(AlgorithmError):
    """Dimensions of the operands do not match the operation's contract."""


class ShapeError(AlgorithmError):
    """Array lengths or shapes are inconsistent."""


class InvalidK(AlgorithmError):
    """Requested cluster count is outside the feasible range."""


class InvalidM(AlgorithmError):
    """Explicit discard count M fails the K*(M+1) <= N feasibility check."""


class ZeroReferenceCoordinate(AlgorithmError):
    """A reference center coordinate is exactly zero, so the relative
    deviation |A - C| / |A| is undefined."""


class ExhaustedCandidates(AlgorithmError):
    """Every sample was discarded before K centroids could be selected.

    Carries the largest discard count that is feasible for the instance so
    the caller can rerun with an explicit, smaller M.
    """

    def __init__(self, message: str, largest_feasible_m: int):
        super().__init__(message)
        self.largest_feasible_m = largest_feasible_m


class IoError(DataError):
    """A dataset file is missing or unreadable."""


class ParseError(DataError):
    """A dataset file has a ragged or non-numeric row.

    `line` is the 1-based line number of the offending row.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
