# models/workspace.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the transient matrices of one BUG or midpoint BUG step.

"""
from dataclasses import dataclass
from typing import Optional
import numpy as np
from lowrank_strang.exceptions import RankCapExceededError


# pylint: disable=too-many-instance-attributes
@dataclass
class BugWorkspace:
    """Intermediate state of a basis update & Galerkin step. Unused stages stay None."""

    K: Optional[np.ndarray] = None
    """(ndarray): The K-step state at the end of the step, m x r."""
    L: Optional[np.ndarray] = None
    """(ndarray): The L-step state at the end of the step, m x r."""
    U_hat: Optional[np.ndarray] = None
    """(ndarray): The augmented range basis orth([U0, K]), at most 2r columns."""
    V_hat: Optional[np.ndarray] = None
    """(ndarray): The augmented corange basis orth([V0, L]), at most 2r columns."""
    M_hat: Optional[np.ndarray] = None
    """(ndarray): U_hat^* U0."""
    N_hat: Optional[np.ndarray] = None
    """(ndarray): V_hat^* V0."""
    S_hat: Optional[np.ndarray] = None
    """(ndarray): The Galerkin core at the end of the step."""
    U_bar: Optional[np.ndarray] = None
    """(ndarray): The midpoint range basis, at most 4r columns."""
    V_bar: Optional[np.ndarray] = None
    """(ndarray): The midpoint corange basis, at most 4r columns."""
    M_bar: Optional[np.ndarray] = None
    """(ndarray): U_bar^* U0."""
    N_bar: Optional[np.ndarray] = None
    """(ndarray): V_bar^* V0."""
    S_bar: Optional[np.ndarray] = None
    """(ndarray): The final Galerkin core before truncation."""

    @property
    def r_hat(self) -> int:
        """(int): The rank of the augmented bases."""
        return max(_cols(self.U_hat), _cols(self.V_hat))

    @property
    def r_bar(self) -> int:
        """(int): The rank of the midpoint bases."""
        return max(_cols(self.U_bar), _cols(self.V_bar))

    def check_rank_caps(self, r: int) -> None:
        """
        Asserts r_hat <= 2r and r_bar <= 4r.

        Args:
            r (int): The rank of the factor the step started from.

        Raises:
            RankCapExceededError: If a basis is too large.
        """
        for name, basis, cap in (
            ("U_hat", self.U_hat, 2 * r),
            ("V_hat", self.V_hat, 2 * r),
            ("U_bar", self.U_bar, 4 * r),
            ("V_bar", self.V_bar, 4 * r),
        ):
            if _cols(basis) > cap:
                raise RankCapExceededError(name, _cols(basis), cap)


def _cols(basis) -> int:
    return 0 if basis is None else basis.shape[1]
