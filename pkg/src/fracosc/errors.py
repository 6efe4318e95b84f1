"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class MeshSizeError(ValueError):
    """The mesh has too few nodes for the requested operation."""


class ConfigError(ValueError):
    """A scenario configuration failed validation; message carries the key path."""


class AccuracyLossError(ArithmeticError):
    """Requested accuracy is unreachable in double precision.

    Carries the best available value and the error bound actually achieved.
    """

    def __init__(self, message: str, value: float, est_abs_error: float):
        super().__init__(message)
        self.value = value
        self.est_abs_error = est_abs_error


class DivergenceError(ArithmeticError):
    """A time-stepping scheme produced a non-finite value.

    ``last_good_index`` is the last node index with finite state.
    """

    def __init__(self, message: str, last_good_index: int):
        super().__init__(message)
        self.last_good_index = last_good_index


class GradientBlowupError(ArithmeticError):
    """The curvature operator saturated (|u| -> 1); reports the failing step."""

    def __init__(self, message: str, step_index: int, time: float):
        super().__init__(message)
        self.step_index = step_index
        self.time = time
