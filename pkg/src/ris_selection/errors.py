"""Exception types raised across the simulator."""


class RisSelectionError(Exception):
    """Base class for all simulator errors."""


class ConfigError(RisSelectionError, ValueError):
    """Invalid scenario configuration or override."""


class DimensionError(RisSelectionError, ValueError):
    """Array operands are not conformable."""


class NumericalError(RisSelectionError, ArithmeticError):
    """Input violates a numerical precondition (zero channel, non-PSD, ...)."""


class ResultsIOError(RisSelectionError, OSError):
    """Reading or writing result files failed."""

    def __init__(self, path, message: str):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")
