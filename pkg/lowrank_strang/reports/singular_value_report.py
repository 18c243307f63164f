# reports/singular_value_report.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the leading singular values of a final state.

"""
import numpy as np
from lowrank_strang.reports.experiment_report import ExperimentReport


class SingularValueReport(ExperimentReport):
    """sigma_1 >= ... >= sigma_k of the state at the final time."""

    config = "singular_value_report"
    columns = ("index", "sigma")

    def __init__(self, label: str, values, metadata: dict = None) -> None:
        super().__init__(label, metadata)
        self.values = np.asarray(values, dtype=float)
        """(ndarray): The singular values, descending."""

    def __len__(self) -> int:
        return len(self.values)

    def decay(self) -> float:
        """Returns sigma_k / sigma_1."""
        return float(self.values[-1] / self.values[0]) if self.values[0] else 0.0

    def csv_rows(self) -> list:
        return [[k, float(sigma)] for k, sigma in enumerate(self.values, start=1)]

    @property
    def printout(self) -> tuple:
        return (
            self._print_title(),
            self._print_row(self.columns),
            *[self._print_row(row) for row in self.csv_rows()],
            "",
            self._print_metadata(),
        )
