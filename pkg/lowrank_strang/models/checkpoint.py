# models/checkpoint.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a stored reference solution.

"""
from typing import Optional
from sqlalchemy import String
from sqlalchemy.orm import Mapped, mapped_column
from lowrank_strang.models.base import Base


class Checkpoint(Base):
    """
    A dense reference solution on disk, identified by the content hash of the parameters that
    produced it and verified by the digest of the stored matrix.
    """

    content_hash: Mapped[str] = mapped_column(String(128), unique=True)
    """(str): Hash of the problem and reference parameters."""
    label: Mapped[str] = mapped_column(String(64))
    """(str): The problem label."""
    m: Mapped[int] = mapped_column()
    """(int): The grid size."""
    T: Mapped[float] = mapped_column()
    """(float): The final time of the reference."""
    tau_ref: Mapped[float] = mapped_column()
    """(float): The reference step size."""
    seed: Mapped[Optional[int]] = mapped_column(nullable=True)
    """(`int`, optional): The seed of random problem data."""
    path: Mapped[str] = mapped_column(String(1000))
    """(str): The Matrix Market file holding the state."""
    digest: Mapped[str] = mapped_column(String(128))
    """(str): Digest of the stored matrix."""

    def __repr__(self) -> str:
        return f"Checkpoint <{self.label}, m={self.m}, tau_ref={self.tau_ref:g}>"
