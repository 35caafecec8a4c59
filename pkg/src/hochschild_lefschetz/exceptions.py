# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Custom exceptions used by modules in hochschild-lefschetz."""

from __future__ import annotations

from collections.abc import Sequence


class HochschildLefschetzError(Exception):
    """Base class of every error raised by hochschild-lefschetz."""


class DimensionMismatchError(HochschildLefschetzError):
    """Two objects that are combined do not live in the same algebra."""


class DomainError(HochschildLefschetzError, ValueError):
    """An operation was called outside of its domain."""


class OperatorSyntaxError(HochschildLefschetzError, ValueError):
    """The textual form of an operator or a chain could not be parsed."""

    def __init__(self, message: str, text: str, position: int) -> None:
        """Creates a new OperatorSyntaxError exception."""
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class StructureError(HochschildLefschetzError):
    """An algebraic or combinatorial structure violates its axioms."""


class InconclusiveError(HochschildLefschetzError):
    """A computation ran out of truncation windows before it could decide."""

    def __init__(self, message: str, windows: Sequence[object]) -> None:
        """Creates a new InconclusiveError exception."""
        self.message = message
        self.windows = tuple(windows)
        super().__init__(message)


class CalibrationError(HochschildLefschetzError):
    """A reference class or a calibration constant is degenerate."""


class FitUnstableError(HochschildLefschetzError):
    """A least-squares fit is too badly conditioned to be trusted."""

    def __init__(self, message: str, condition: float) -> None:
        """Creates a new FitUnstableError exception."""
        self.message = message
        self.condition = condition
        super().__init__(message)


class QuadratureError(HochschildLefschetzError):
    """A numerical quadrature did not reach its requested accuracy."""


class ConfigError(HochschildLefschetzError, ValueError):
    """A configuration file or value does not follow the configuration schema."""

    def __init__(self, message: str, key: str) -> None:
        """Creates a new ConfigError exception."""
        self.message = message
        self.key = key
        super().__init__(f"{key}: {message}")
