# linalg/core.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Dense linear algebra primitives used by the integrators: orthonormalization, singular value
decomposition, matrix exponential actions and Frobenius distances.

"""
import numpy as np
import scipy.linalg as la
from lowrank_strang.config import config
from lowrank_strang.exceptions import (
    DegenerateBasisError,
    DimensionMismatchError,
    NonFiniteInputError,
)


def scalar_type() -> np.dtype:
    """Returns the configured scalar field (real double precision by default)."""
    return np.dtype(config.linalg["dtype"])


def adjoint(M: np.ndarray) -> np.ndarray:
    """Conjugate transpose, a plain transpose in the real field."""
    return M.conj().T if np.iscomplexobj(M) else M.T


def orth(M: np.ndarray, tol: float = None) -> np.ndarray:
    """
    Orthonormal basis of the numerical column span of M.

    Columns are taken greedily by largest residual (column pivoted QR); a column whose residual
    after projection onto the columns already taken is at most ``tol * ||M||_F`` is dropped.
    Wide inputs are allowed and yield at most ``rows`` columns.

    Args:
        M (ndarray): The m x k matrix.
        tol (`float`, optional): Relative drop tolerance. Defaults to the configured orth_tol.

    Raises:
        DegenerateBasisError: If M is the zero matrix.
        NonFiniteInputError: If M has non finite entries.

    Returns:
        ndarray: The m x k' matrix with orthonormal columns, k' <= min(m, k).
    """
    tol = config.linalg["orth_tol"] if tol is None else tol
    if not np.all(np.isfinite(M)):
        raise NonFiniteInputError("orth")

    scale = la.norm(M)
    if scale == 0:
        raise DegenerateBasisError()

    Q, R, _ = la.qr(M, mode="economic", pivoting=True, check_finite=False)
    residuals = np.abs(np.diag(R))
    keep = int(np.count_nonzero(residuals > tol * scale))
    if keep == 0:
        raise DegenerateBasisError()
    return Q[:, :keep]


def svd_full(M: np.ndarray) -> tuple:
    """
    Thin singular value decomposition M = U diag(sigma) V^*.

    Args:
        M (ndarray): The m x k matrix.

    Raises:
        NonFiniteInputError: If M has non finite entries.

    Returns:
        tuple: (U, sigma, V) with sigma sorted descending and orthonormal columns in U and V.
    """
    if not np.all(np.isfinite(M)):
        raise NonFiniteInputError("svd")
    U, sigma, Vh = la.svd(M, full_matrices=False, check_finite=False)
    return U, sigma, adjoint(Vh)


def expm_action(A, t: float, M: np.ndarray) -> np.ndarray:
    """
    Applies e^{tA} to the thin matrix M.

    The exponential is computed once per distinct (A, t) by scaling and squaring and cached on
    the operator handle.

    Args:
        A (OperatorHandle): The m x m operator.
        t (float): The time, t >= 0.
        M (ndarray): The m x k matrix.

    Raises:
        DimensionMismatchError: If M does not have m rows.

    Returns:
        ndarray: e^{tA} M.
    """
    if M.shape[0] != A.m:
        raise DimensionMismatchError("expm_action", (A.m, A.m), M.shape)
    if t == 0 or A.is_zero:
        return M.copy()
    return A.exponential(t) @ M


def frob_distance(X: np.ndarray, Y: np.ndarray) -> float:
    """
    Frobenius norm of X - Y.

    Raises:
        DimensionMismatchError: If the shapes differ.
    """
    if X.shape != Y.shape:
        raise DimensionMismatchError("frob_distance", X.shape, Y.shape)
    return float(la.norm(X - Y))


def orthonormality_defect(Q: np.ndarray) -> float:
    """Returns ||Q^* Q - I||_F."""
    return float(la.norm(adjoint(Q) @ Q - np.eye(Q.shape[1])))
