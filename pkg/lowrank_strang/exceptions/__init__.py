# exceptions/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides exceptions arising from low-rank integration and benchmarking.

"""


class LowRankException(Exception):
    """Base low-rank exception

    Attributes:
        msg (str): Human readable string describing the exception.
    """

    message: str

    def __str__(self) -> str:
        return f"{self.message}"


class ConfigurationError(LowRankException):
    """
    Invalid user supplied configuration. The command line maps these to exit code 2.

    Args:
        message (str): A description of the invalid setting.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__()


class NumericalDivergenceError(LowRankException):
    """Numerical blow-up. The command line maps these to exit code 3."""


class DegenerateBasisError(LowRankException):
    """An orthonormal basis cannot be extracted from an all-zero matrix."""

    def __init__(self) -> None:
        self.message = "degenerate basis"
        super().__init__()


class NonFiniteInputError(LowRankException):
    """
    The matrix contains infinite or nan entries.

    Args:
        operation (str): The operation that received the input.
    """

    def __init__(self, operation: str) -> None:
        self.message = f"non-finite input to {operation}"
        super().__init__()


class DimensionMismatchError(LowRankException):
    """
    The operands of an operation have incompatible shapes.

    Args:
        operation (str): The operation being attempted.
        left (tuple): The shape of the first operand.
        right (tuple): The shape of the second operand.
    """

    def __init__(self, operation: str, left: tuple, right: tuple) -> None:
        self.message = (
            f"{operation}: incompatible shapes {tuple(left)} and {tuple(right)}."
        )
        super().__init__()


class InvalidFactorError(LowRankException):
    """
    A low-rank factor violates its structural invariants.

    Args:
        reason (str): The violated invariant.
    """

    def __init__(self, reason: str) -> None:
        self.message = f"Invalid low-rank factor: {reason}."
        super().__init__()


class InvalidTruncationModeError(ConfigurationError):
    """
    Fixed truncation needs a target rank of at least one, adaptive truncation a
    non-negative threshold.

    Args:
        message (str): A description of the invalid setting.
    """


class InvalidSchemeConfigError(ConfigurationError):
    """
    The step size must be positive and there must be at least one inner substep.

    Args:
        message (str): A description of the invalid setting.
    """


class NonlinearityBlowUpError(NumericalDivergenceError):
    """
    The nonlinear right hand side produced non-finite values.

    Args:
        t (float): The time at which the evaluation failed.
    """

    def __init__(self, t: float) -> None:
        self.t = t
        self.message = f"nonlinearity blow-up at t = {t:.6g}"
        super().__init__()


class StepCountOverflowError(ConfigurationError):
    """
    The requested integration needs more steps than allowed.

    Args:
        steps (int): The number of steps required.
        limit (int): The configured maximum.
    """

    def __init__(self, steps: int, limit: int) -> None:
        super().__init__(f"Integration requires {steps} steps, more than the limit of {limit}.")


class RankCapExceededError(LowRankException):
    """
    An augmented basis is larger than the BUG construction allows.

    Args:
        name (str): The basis in question.
        rank (int): Its number of columns.
        cap (int): The allowed maximum.
    """

    def __init__(self, name: str, rank: int, cap: int) -> None:
        self.message = f"Augmented basis {name} has rank {rank}, above its cap of {cap}."
        super().__init__()


class InvalidGridError(ConfigurationError):
    """
    A grid needs at least two interior points and a positive spacing.

    Args:
        message (str): A description of the invalid setting.
    """


class InvalidProblemError(ConfigurationError):
    """
    The problem specification violates its invariants.

    Args:
        message (str): A description of the violated invariant.
    """


class UnknownProblemError(ConfigurationError):
    """
    The problem label is not one of the registered benchmarks.

    Args:
        label (str): The label supplied.
        labels (list): The registered labels.
    """

    def __init__(self, label: str, labels: list) -> None:
        super().__init__(
            f"Unknown problem '{label}', expected one of: {', '.join(labels)}."
        )


class OperatorParseError(ConfigurationError):
    """
    A Matrix Market operator file could not be parsed.

    Args:
        path (str): The file being parsed.
        line (int): The offending line number, counted from 1.
        reason (str): What went wrong.
    """

    def __init__(self, path, line: int, reason: str) -> None:
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {reason}")


class NonSquareOperatorError(ConfigurationError):
    """
    Operators must be square.

    Args:
        path (str): The file being parsed.
        line (int): The line holding the size declaration.
        rows (int): The declared number of rows.
        cols (int): The declared number of columns.
    """

    def __init__(self, path, line: int, rows: int, cols: int) -> None:
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: operator must be square, got {rows}x{cols}.")


class OrderUndefinedError(LowRankException):
    """
    The Runge rule denominator underflowed.

    Args:
        tau (float): The step size of the estimate.
    """

    def __init__(self, tau: float) -> None:
        self.tau = tau
        self.message = f"order undefined at tau = {tau:.6g}"
        super().__init__()


class MissingReferenceError(LowRankException):
    """
    No stored reference solution matches the problem parameters.

    Args:
        content_hash (str): The content hash that was looked up.
    """

    def __init__(self, content_hash: str) -> None:
        self.message = f"No reference checkpoint with hash {content_hash}."
        super().__init__()
