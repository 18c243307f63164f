# reports/rank_history.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the ranks selected by an adaptive integration, step by step.

"""
from lowrank_strang.reports.experiment_report import ExperimentReport


class RankHistory(ExperimentReport):
    """(t_k, r_k, tail_norm, floored) after every step of a rank adaptive run."""

    config = "rank_history"
    columns = ("t", "rank", "tail_norm", "floored")

    def __init__(
        self, label: str, entries=(), metadata: dict = None, final_state=None
    ) -> None:
        super().__init__(label, metadata)
        self.entries = [tuple(entry) for entry in entries]
        """(list): (t_k, r_k, tail_norm, floored) per step."""
        self.final_state = final_state
        """(LowRankFactor): The state at the final time."""

    @classmethod
    def from_result(cls, label: str, result, metadata: dict = None) -> "RankHistory":
        """Builds the history recorded by an IntegrationResult."""
        return cls(label, result.history, metadata, result.state)

    @property
    def times(self) -> list:
        """(list): The step end times."""
        return [entry[0] for entry in self.entries]

    @property
    def ranks(self) -> list:
        """(list): The rank after each step."""
        return [entry[1] for entry in self.entries]

    @property
    def tail_norms(self) -> list:
        """(list): The truncation tail of each step."""
        return [entry[2] for entry in self.entries]

    @property
    def max_rank(self) -> int:
        """(int): The largest rank attained."""
        return max(self.ranks)

    def csv_rows(self) -> list:
        return [list(entry) for entry in self.entries]

    @property
    def printout(self) -> tuple:
        return (
            self._print_title(),
            self._print_row(self.columns),
            *[self._print_row(entry) for entry in self.entries],
            "",
            self._print_metadata(),
        )
