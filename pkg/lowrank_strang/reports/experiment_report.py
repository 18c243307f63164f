# reports/experiment_report.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents an abstraction of an experiment report with a printout and a CSV form.

"""
import csv
import logging
import math
from pathlib import Path
from typing import Union
from lowrank_strang.config import config as configuration

logger = logging.getLogger(__name__)


def csv_value(value) -> str:
    """Formats a cell: floats with round trip precision, missing values and nan as empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return "" if math.isnan(value) else repr(value)
    return str(value)


def print_value(value) -> str:
    """Formats a cell of the printout."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "-"
    if isinstance(value, float):
        return f"{value:.4e}"
    return str(value)


class ExperimentReport:
    """This class is an abstract representation of the outcome of an experiment."""

    config: str
    """(str): The configuration section for the report."""
    columns: tuple
    """(tuple): The CSV header."""

    # printing
    indent: str = " " * configuration.reports["indent_length"]
    """(str): The indent of report rows."""
    column_width: int = configuration.reports["column_width"]
    """(int): The width of each printed column."""

    def __init__(self, label: str, metadata: dict = None) -> None:
        self.label = label
        """(str): The problem label."""
        self.title = configuration.reports[self.config]["title"]
        """(str): The report title."""
        self.metadata = dict(metadata or {})
        """(dict): Parameters of the experiment."""

    def __str__(self) -> str:
        template = "{}\n" * len(self.printout)
        return template.format(*self.printout)

    @property
    def printout(self) -> tuple:
        """(tuple): The sections to be printed out."""
        raise NotImplementedError

    @property
    def width(self) -> int:
        """(int): The width of the report printout."""
        return len(self.indent) + self.column_width * len(self.print_columns)

    @property
    def print_columns(self) -> tuple:
        """(tuple): The headings of the printed table."""
        return self.columns

    def csv_rows(self) -> list:
        """Returns the rows of the CSV form, without the header."""
        raise NotImplementedError

    def _print_title(self) -> str:
        return f"\n{self.label.center(self.width)}\n{self.title.center(self.width)}"

    def _print_row(self, cells) -> str:
        return self.indent + "".join(
            f"{print_value(cell):>{self.column_width}}" for cell in cells
        )

    def _print_metadata(self) -> str:
        return "\n".join(
            f"{self.indent}{key}: {value}" for key, value in sorted(self.metadata.items())
        )

    def write_csv(self, path: Union[str, Path]) -> Path:
        """
        Writes the header and rows to a CSV file.

        Args:
            path (`str` | `Path`): The target file.

        Returns:
            Path: The file written.
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", -1, "UTF-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(
                [[csv_value(cell) for cell in row] for row in self.csv_rows()]
            )
        logger.info("Wrote %s", path)
        return path
