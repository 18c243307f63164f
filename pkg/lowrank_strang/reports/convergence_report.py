# reports/convergence_report.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the final time errors of a (tau, rank) sweep and its Runge order estimates.

"""
import math
from typing import NamedTuple, Optional
import numpy as np
from lowrank_strang.config import config as configuration
from lowrank_strang.reports.experiment_report import ExperimentReport


class ConvergenceRow(NamedTuple):
    """One sweep cell."""

    tau: float
    """(float): The step size."""
    mode: str
    """(str): The truncation mode, e.g. 'r=16' or 'theta=1e-08'."""
    error: float
    """(float): Absolute Frobenius error at the final time, nan when diverged."""
    relative_error: float = math.nan
    """(float): The error relative to the norm of the reference."""
    runtime_ms: Optional[float] = None
    """(`float`, optional): Wall time of the cell."""
    diverged: bool = False
    """(bool): Whether the integration blew up."""


class ConvergenceReport(ExperimentReport):
    """
    The errors of a convergence sweep, grouped by truncation mode in order of appearance and
    sorted by descending tau within each mode.
    """

    config = "convergence_report"
    columns = tuple(configuration.harness["csv_columns"])

    # pylint: disable=too-many-arguments
    def __init__(
        self,
        label: str,
        scheme: str,
        m: int,
        seed: Optional[int] = None,
        metadata: dict = None,
    ) -> None:
        super().__init__(label, metadata)
        self.scheme = str(scheme)
        """(str): The scheme of every cell."""
        self.m = m
        """(int): The grid size."""
        self.seed = seed
        """(`int`, optional): The seed of random problem data."""
        self.deltas = {}
        """(dict): The initial truncation error delta = ||X0 - Y0||_F of each mode."""
        self._rows = []
        self._orders = {}

    @property
    def modes(self) -> list:
        """(list): The truncation modes in order of appearance."""
        return list(dict.fromkeys(row.mode for row in self._rows))

    @property
    def rows(self) -> list:
        """(list): The cells, by mode and descending tau."""
        modes = self.modes
        return sorted(self._rows, key=lambda row: (modes.index(row.mode), -row.tau))

    @property
    def orders(self) -> list:
        """(list): (mode, tau, p) for every order estimate; p is None when undefined."""
        modes = self.modes
        return sorted(
            ((mode, tau, p) for (mode, tau), p in self._orders.items()),
            key=lambda item: (modes.index(item[0]), -item[1]),
        )

    @property
    def diverged(self) -> list:
        """(list): The cells that blew up."""
        return [row for row in self._rows if row.diverged]

    @property
    def print_columns(self) -> tuple:
        return ("tau", "mode", "error", "relative", "order")

    # pylint: disable=too-many-arguments
    def add_row(
        self,
        tau: float,
        mode: str,
        error: float,
        relative_error: float = math.nan,
        runtime_ms: Optional[float] = None,
        diverged: bool = False,
    ) -> ConvergenceRow:
        """Adds a cell. Diverged cells carry a nan error."""
        row = ConvergenceRow(
            float(tau),
            str(mode),
            math.nan if diverged else float(error),
            math.nan if diverged else float(relative_error),
            runtime_ms,
            diverged,
        )
        self._rows.append(row)
        return row

    def add_order(self, mode: str, tau: float, p: Optional[float]) -> None:
        """Records the Runge estimate of the triple whose smallest step is tau."""
        self._orders[(str(mode), float(tau))] = p

    def order_at(self, mode: str, tau: float) -> Optional[float]:
        """Returns the estimate recorded at (mode, tau), if any."""
        return self._orders.get((str(mode), float(tau)))

    def errors(self, mode: str) -> list:
        """Returns the errors of a mode by descending tau."""
        return [row.error for row in self.rows if row.mode == str(mode)]

    def mean_order(self, mode: str) -> float:
        """
        The mean of the defined estimates of a mode with |p| at most the configured order_cap.

        Returns:
            float: The mean, nan when no estimate qualifies.
        """
        cap = configuration.harness["order_cap"]
        ps = [
            p
            for (m, _), p in self._orders.items()
            if m == str(mode) and p is not None and abs(p) <= cap
        ]
        return float(np.mean(ps)) if ps else math.nan

    def csv_rows(self) -> list:
        record_runtime = configuration.harness["record_runtime"]
        return [
            [
                self.label,
                self.m,
                self.scheme,
                row.tau,
                row.mode,
                "diverged" if row.diverged else row.error,
                self.order_at(row.mode, row.tau),
                row.runtime_ms if record_runtime else None,
                self.seed,
            ]
            for row in self.rows
        ]

    @property
    def printout(self) -> tuple:
        rows = [
            self._print_row(
                (
                    row.tau,
                    row.mode,
                    "diverged" if row.diverged else row.error,
                    row.relative_error,
                    self.order_at(row.mode, row.tau),
                )
            )
            for row in self.rows
        ]
        summary = [
            f"{self.indent}{mode}: delta = {self.deltas.get(mode, math.nan):.3e}, "
            f"mean order = {self.mean_order(mode):.3f}"
            for mode in self.modes
        ]
        return (
            self._print_title(),
            self._print_row(self.print_columns),
            *rows,
            "",
            *summary,
            self._print_metadata(),
        )
