# models/scheme.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the discretization settings of a time integration.

"""
from dataclasses import dataclass
from typing import Optional
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidSchemeConfigError
from lowrank_strang.models.truncation import TruncationMode


@dataclass(frozen=True)
class SchemeConfig:
    """Step size, inner Heun resolution and the truncation rule of an integration."""

    tau: float
    """(float): The outer step size."""
    truncation: Optional[TruncationMode] = None
    """(`TruncationMode`, optional): How each BUG2 step is rounded back to low rank. Defaults
    to keeping the rank of the incoming factor."""
    inner_substeps: Optional[int] = None
    """(int): Heun steps per K, L and S integration. Defaults to the configured value."""

    def __post_init__(self) -> None:
        if self.inner_substeps is None:
            object.__setattr__(
                self, "inner_substeps", int(config.integrators["inner_substeps"])
            )
        if not self.tau > 0:
            raise InvalidSchemeConfigError(f"The step size must be positive, got {self.tau}.")
        if self.inner_substeps < 1:
            raise InvalidSchemeConfigError(
                f"At least one inner substep is required, got {self.inner_substeps}."
            )
