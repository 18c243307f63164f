# models/grid.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a uniform one dimensional grid of interior points with homogeneous Dirichlet ends.

"""
from dataclasses import dataclass
import numpy as np
from lowrank_strang.exceptions import InvalidGridError


@dataclass(frozen=True)
class GridSpec:
    """Interior nodes x_i = lo + i h, i = 1..m, with h = (hi - lo) / (m + 1)."""

    m: int
    """(int): The number of interior points."""
    lo: float
    """(float): The lower domain bound."""
    hi: float
    """(float): The upper domain bound."""

    def __post_init__(self) -> None:
        if self.m < 2:
            raise InvalidGridError(f"A grid needs at least 2 interior points, got {self.m}.")
        if not self.hi > self.lo:
            raise InvalidGridError(
                f"The grid spacing must be positive, got bounds [{self.lo}, {self.hi}]."
            )

    @property
    def h(self) -> float:
        """(float): The grid spacing."""
        return (self.hi - self.lo) / (self.m + 1)

    @property
    def nodes(self) -> np.ndarray:
        """(ndarray): The m interior nodes."""
        return self.lo + self.h * np.arange(1, self.m + 1)
