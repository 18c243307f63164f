# models/operator.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the time independent linear operator A of the matrix equation.

"""
import threading
from dataclasses import dataclass, field
from functools import cached_property
import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
from strenum import StrEnum
from lowrank_strang.exceptions import DimensionMismatchError


@dataclass(frozen=True, eq=False)
class OperatorHandle:
    """
    An m x m operator in dense or tridiagonal banded storage, times a scalar multiplier.

    The dense exponentials e^{tA} are cached per t. The cache is only ever filled, so handles
    can be shared between concurrent integrations.
    """

    Storage = StrEnum("Storage", {"DENSE": "dense", "BANDED": "banded"})
    """(StrEnum): The storage formats of operators."""

    matrix: object
    """(`ndarray` | `scipy.sparse.dia_array`): The unscaled operator entries."""
    storage: Storage = "dense"
    """(Storage): How the entries are stored."""
    scale: float = 1.0
    """(float): Scalar multiplier folded into the operator (e.g. a diffusion coefficient)."""
    symmetric: bool = False
    """(bool): Whether the operator equals its transpose."""
    label: str = ""
    """(str): A human readable description."""

    _exponentials: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        rows, cols = self.matrix.shape
        if rows != cols:
            raise DimensionMismatchError("OperatorHandle", (rows, cols), (rows, rows))
        object.__setattr__(self, "storage", OperatorHandle.Storage(self.storage))

    @property
    def m(self) -> int:
        """(int): The dimension of the operator."""
        return self.matrix.shape[0]

    @cached_property
    def dense(self) -> np.ndarray:
        """(ndarray): The scaled operator as a dense array."""
        entries = (
            self.matrix.toarray() if sp.issparse(self.matrix) else np.asarray(self.matrix)
        )
        dense = self.scale * entries
        dense.setflags(write=False)
        return dense

    @property
    def is_zero(self) -> bool:
        """(bool): Whether the operator vanishes identically."""
        return self.scale == 0 or not np.any(self.dense)

    def __matmul__(self, M: np.ndarray) -> np.ndarray:
        if M.shape[0] != self.m:
            raise DimensionMismatchError("OperatorHandle @", (self.m, self.m), M.shape)
        return self.scale * (self.matrix @ M)

    def exponential(self, t: float) -> np.ndarray:
        """
        Returns the dense exponential e^{tA}, computed by scaling and squaring on first use.

        Args:
            t (float): The time.

        Returns:
            ndarray: A read only m x m array.
        """
        key = float(t)
        with self._lock:
            cached = self._exponentials.get(key)
            if cached is None:
                cached = la.expm(key * self.dense)
                cached.setflags(write=False)
                self._exponentials[key] = cached
        return cached
