"""Exception types shared across the package."""


class EvtolSimError(Exception):
    """Base class for all evtolsim errors."""


class ParameterError(EvtolSimError):
    """A numeric input violates its documented range. Carries the field name."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class InfeasibleMissionError(EvtolSimError):
    """Requested range cannot fit the climb/descent ground distance."""

    def __init__(self, message: str, min_feasible_range_mi: float):
        super().__init__(message)
        self.min_feasible_range_mi = min_feasible_range_mi


class MassBudgetError(EvtolSimError):
    """MTOM split leaves no mass for the battery."""

    def __init__(self, message: str, shortfall_kg: float):
        super().__init__(message)
        self.shortfall_kg = shortfall_kg


class ContractError(EvtolSimError):
    """An argument does not satisfy an operation's calling contract."""


class DataError(EvtolSimError):
    """Malformed data handed to an operation (pack lists, curves, tables)."""


class SpecParseError(EvtolSimError):
    """Spec file could not be parsed. Carries the offending file position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SpecValidationError(EvtolSimError):
    """Spec file parsed but declares an invalid entity."""

    def __init__(self, message: str, name: str = "", field: str = "",
                 line: int | None = None):
        super().__init__(message)
        self.name = name
        self.field = field
        self.line = line
