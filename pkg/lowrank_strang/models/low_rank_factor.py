# models/low_rank_factor.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a matrix in factored form U S V^*, the state evolved by the low-rank integrators.

"""
from dataclasses import dataclass
import numpy as np
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidFactorError
from lowrank_strang.linalg import orthonormality_defect, scalar_type


@dataclass(frozen=True, eq=False)
class LowRankFactor:
    """
    A factored matrix U S V^* with orthonormal U (m x r) and V (n x r) and a general,
    not necessarily diagonal, r x r core S. Operations never modify a factor in place.
    """

    U: np.ndarray
    """(ndarray): The m x r left basis."""
    S: np.ndarray
    """(ndarray): The r x r core."""
    V: np.ndarray
    """(ndarray): The n x r right basis."""

    def __post_init__(self) -> None:
        if self.U.ndim != 2 or self.V.ndim != 2 or self.S.ndim != 2:
            raise InvalidFactorError("U, S and V must be matrices")
        r = self.U.shape[1]
        if r < 1:
            raise InvalidFactorError("the rank must be at least 1")
        if self.S.shape != (r, r) or self.V.shape[1] != r:
            raise InvalidFactorError(
                f"shapes U{self.U.shape}, S{self.S.shape}, V{self.V.shape} do not agree"
            )
        if r > min(self.U.shape[0], self.V.shape[0]):
            raise InvalidFactorError(f"rank {r} exceeds the matrix dimensions")

    def __repr__(self) -> str:
        return f"LowRankFactor <{self.shape[0]}x{self.shape[1]}, rank {self.rank}>"

    @property
    def rank(self) -> int:
        """(int): The number of columns of the bases."""
        return self.U.shape[1]

    @property
    def m(self) -> int:
        """(int): The number of rows of the represented matrix."""
        return self.U.shape[0]

    @property
    def shape(self) -> tuple:
        """(tuple): The shape of the represented matrix."""
        return (self.U.shape[0], self.V.shape[0])

    @classmethod
    def zeros(cls, m: int, r: int = 1, n: int = None) -> "LowRankFactor":
        """
        A factor of the zero matrix with canonical bases.

        Args:
            m (int): Rows of the represented matrix.
            r (int): The rank of the (vanishing) core. Defaults to 1.
            n (`int`, optional): Columns of the represented matrix. Defaults to m.
        """
        n = m if n is None else n
        dtype = scalar_type()
        return cls(
            np.eye(m, r, dtype=dtype), np.zeros((r, r), dtype=dtype), np.eye(n, r, dtype=dtype)
        )

    def validate(self, tol: float = None) -> "LowRankFactor":
        """
        Checks orthonormality of both bases and finiteness of the core.

        Args:
            tol (`float`, optional): Largest admissible ||Q^* Q - I||_F. Defaults to the
                configured orthonormality_tol.

        Raises:
            InvalidFactorError: If an invariant is violated.

        Returns:
            LowRankFactor: The factor itself, for chaining.
        """
        tol = config.linalg["orthonormality_tol"] if tol is None else tol
        for name, basis in (("U", self.U), ("V", self.V)):
            defect = orthonormality_defect(basis)
            if not defect <= tol:
                raise InvalidFactorError(
                    f"{name} is not orthonormal (defect {defect:.3e} > {tol:.1e})"
                )
        if not np.all(np.isfinite(self.S)):
            raise InvalidFactorError("the core has non-finite entries")
        return self

    @classmethod
    def from_dense(cls, X: np.ndarray, mode=None) -> "LowRankFactor":
        """
        Factors a dense matrix by its singular value decomposition.

        Args:
            X (ndarray): The matrix.
            mode (`TruncationMode`, optional): The truncation rule. Defaults to keeping every
                nonzero singular value.
        """
        from lowrank_strang.lowrank import (  # pylint: disable=import-outside-toplevel
            factor_from_dense,
        )

        return factor_from_dense(X, mode).factor
