# models/truncation.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the rule used to round a factor back to low rank after an augmented step.

"""
from dataclasses import dataclass
from typing import Optional
from strenum import StrEnum
from lowrank_strang.exceptions import InvalidTruncationModeError


@dataclass(frozen=True)
class TruncationMode:
    """
    Fixed rank truncation keeps min(r_target, rank) singular values. Adaptive truncation keeps
    the fewest singular values whose discarded tail has Frobenius norm at most theta.
    """

    Kind = StrEnum("Kind", {"FIXED": "fixed", "ADAPTIVE": "adaptive"})
    """(StrEnum): The truncation kinds."""

    kind: Kind
    """(Kind): Fixed or adaptive."""
    r_target: Optional[int] = None
    """(`int`, optional): The target rank in fixed mode."""
    theta: Optional[float] = None
    """(`float`, optional): The absolute tail threshold in adaptive mode."""

    def __post_init__(self) -> None:
        try:
            kind = TruncationMode.Kind(self.kind)
        except ValueError as exc:
            raise InvalidTruncationModeError(
                f"Unknown truncation kind '{self.kind}'."
            ) from exc
        object.__setattr__(self, "kind", kind)

        if kind == TruncationMode.Kind.FIXED and (
            self.r_target is None or self.r_target < 1
        ):
            raise InvalidTruncationModeError(
                f"Fixed truncation requires a target rank of at least 1, got {self.r_target}."
            )
        if kind == TruncationMode.Kind.ADAPTIVE and (
            self.theta is None or self.theta < 0
        ):
            raise InvalidTruncationModeError(
                f"Adaptive truncation requires a non-negative threshold, got {self.theta}."
            )

    def __str__(self) -> str:
        if self.kind == TruncationMode.Kind.FIXED:
            return f"r={self.r_target}"
        return f"theta={self.theta:g}"

    @classmethod
    def fixed(cls, r_target: int) -> "TruncationMode":
        """Fixed rank truncation to r_target."""
        return cls(TruncationMode.Kind.FIXED, r_target=r_target)

    @classmethod
    def adaptive(cls, theta: float) -> "TruncationMode":
        """Adaptive truncation with tail threshold theta."""
        return cls(TruncationMode.Kind.ADAPTIVE, theta=theta)

    @property
    def is_adaptive(self) -> bool:
        """(bool): Whether the rank is selected by the threshold."""
        return self.kind == TruncationMode.Kind.ADAPTIVE
