# lowrank/operations.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the algebra of factored matrices: densification, SVD based rounding, sums and
distances computed on the factors.

"""
from typing import NamedTuple, Optional, Union
import numpy as np
import scipy.linalg as la
from lowrank_strang.exceptions import DimensionMismatchError
from lowrank_strang.linalg import adjoint, frob_distance, orth, svd_full
from lowrank_strang.models import LowRankFactor, TruncationMode


class Truncation(NamedTuple):
    """The outcome of svd_truncate."""

    factor: LowRankFactor
    """(LowRankFactor): The truncated factor with diagonal core."""
    tail_norm: float
    """(float): Frobenius norm of the discarded singular values."""
    floored: bool = False
    """(bool): Whether adaptive truncation would have discarded everything and kept rank 1."""


def densify(Y: LowRankFactor) -> np.ndarray:
    """Returns the dense matrix U S V^*."""
    return (Y.U @ Y.S) @ adjoint(Y.V)


def _select_rank(sigma: np.ndarray, mode: TruncationMode) -> tuple:
    # tails[j] = ||sigma[j:]||, tails[len(sigma)] = 0
    tails = np.append(np.sqrt(np.cumsum(sigma[::-1] ** 2)[::-1]), 0.0)
    if not mode.is_adaptive:
        r1 = min(mode.r_target, len(sigma))
        return r1, float(tails[r1]), False
    r1 = int(np.flatnonzero(tails <= mode.theta)[0])
    if r1 == 0:
        return 1, float(tails[1]), True
    return r1, float(tails[r1]), False


def svd_truncate(Y: LowRankFactor, mode: TruncationMode) -> Truncation:
    """
    Rounds a factor using the SVD of its small core only.

    Fixed mode keeps min(r_target, rank) singular values. Adaptive mode keeps the smallest
    r1 >= 1 whose tail (sum_{j > r1} sigma_j^2)^{1/2} is at most theta; when even r1 = 0 would
    qualify, rank 1 is kept and the result is flagged as floored.

    Args:
        Y (LowRankFactor): The factor to round.
        mode (TruncationMode): The truncation rule.

    Returns:
        Truncation: The factor (U u, diag(sigma), V v), its tail norm and the floor flag.
    """
    u, sigma, v = svd_full(Y.S)
    r1, tail_norm, floored = _select_rank(sigma, mode)
    factor = LowRankFactor(
        Y.U @ u[:, :r1], np.diag(sigma[:r1]).astype(Y.S.dtype), Y.V @ v[:, :r1]
    )
    return Truncation(factor, tail_norm, floored)


def factor_from_dense(X: np.ndarray, mode: Optional[TruncationMode] = None) -> Truncation:
    """
    Factors a dense matrix by its singular value decomposition.

    Args:
        X (ndarray): The matrix.
        mode (`TruncationMode`, optional): The truncation rule. Defaults to keeping every
            nonzero singular value.

    Returns:
        Truncation: The factor, the discarded tail and the floor flag.
    """
    U, sigma, V = svd_full(X)
    mode = mode or TruncationMode.adaptive(0.0)
    r1, tail_norm, floored = _select_rank(sigma, mode)
    factor = LowRankFactor(U[:, :r1], np.diag(sigma[:r1]).astype(X.dtype), V[:, :r1])
    return Truncation(factor, tail_norm, floored)


def factored_sum(Y1: LowRankFactor, Y2: LowRankFactor) -> LowRankFactor:
    """
    Returns a factor of Y1 + Y2 over the re-orthonormalized stacked bases, of rank at most
    r1 + r2.

    Raises:
        DimensionMismatchError: If the represented matrices differ in shape.
    """
    if Y1.shape != Y2.shape:
        raise DimensionMismatchError("factored_sum", Y1.shape, Y2.shape)
    stacked_u = np.hstack([Y1.U, Y2.U])
    stacked_v = np.hstack([Y1.V, Y2.V])
    U = orth(stacked_u)
    V = orth(stacked_v)
    core = la.block_diag(Y1.S, Y2.S)
    S = (adjoint(U) @ stacked_u) @ core @ (adjoint(stacked_v) @ V)
    return LowRankFactor(U, S, V)


def factored_distance(
    Y1: LowRankFactor, X: Union[np.ndarray, LowRankFactor]
) -> float:
    """
    Frobenius distance between a factor and a dense or factored matrix.

    For a factored X the dense matrices are never formed: with thin QR factorizations
    [U1, U2] = Q_u R_u and [V1, V2] = Q_v R_v the distance is ||R_u diag(S1, -S2) R_v^*||_F.

    Raises:
        DimensionMismatchError: If the shapes differ.
    """
    if not isinstance(X, LowRankFactor):
        return frob_distance(densify(Y1), X)
    if Y1.shape != X.shape:
        raise DimensionMismatchError("factored_distance", Y1.shape, X.shape)
    _, R_u = la.qr(np.hstack([Y1.U, X.U]), mode="economic")
    _, R_v = la.qr(np.hstack([Y1.V, X.V]), mode="economic")
    core = la.block_diag(Y1.S, -X.S)
    return float(la.norm(R_u @ core @ adjoint(R_v)))


def state_distance(a, b) -> float:
    """Frobenius distance between two states, each dense or factored."""
    if isinstance(a, LowRankFactor):
        return factored_distance(a, b)
    if isinstance(b, LowRankFactor):
        return factored_distance(b, a)
    return frob_distance(a, b)


def state_norm(a) -> float:
    """Frobenius norm of a dense or factored state."""
    if isinstance(a, LowRankFactor):
        return float(la.norm(a.S))
    return float(la.norm(a))


def singular_values(state, k: Optional[int] = None) -> np.ndarray:
    """
    Leading singular values of a dense or factored state, descending.

    Args:
        state (`ndarray` | `LowRankFactor`): The state.
        k (`int`, optional): How many values to return, zero padded beyond the rank.
    """
    core = state.S if isinstance(state, LowRankFactor) else state
    sigma = svd_full(core)[1]
    if k is None:
        return sigma
    return np.pad(sigma[:k], (0, max(0, k - len(sigma))))


def with_rank(Y: LowRankFactor, r: int) -> LowRankFactor:
    """
    Returns a factor of the same matrix with exactly rank r where possible: truncated to its r
    leading singular values when r < rank, otherwise padded with orthonormal directions that
    carry a zero core block.

    Args:
        Y (LowRankFactor): The factor.
        r (int): The requested rank, at most the smaller matrix dimension.
    """
    if r <= Y.rank:
        return svd_truncate(Y, TruncationMode.fixed(r)).factor
    U, _ = la.qr(np.hstack([Y.U, np.eye(Y.shape[0], dtype=Y.U.dtype)]), mode="economic")
    V, _ = la.qr(np.hstack([Y.V, np.eye(Y.shape[1], dtype=Y.V.dtype)]), mode="economic")
    U, V = U[:, :r], V[:, :r]
    S = np.zeros((r, r), dtype=Y.S.dtype)
    k = Y.rank
    S[:k, :k] = (adjoint(U[:, :k]) @ Y.U) @ Y.S @ (adjoint(Y.V) @ V[:, :k])
    return LowRankFactor(U, S, V)
