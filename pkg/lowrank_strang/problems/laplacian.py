# problems/laplacian.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Finite difference operators on uniform grids with homogeneous Dirichlet boundaries.

"""
import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
from lowrank_strang.linalg import adjoint, scalar_type
from lowrank_strang.models import GridSpec, OperatorHandle, ProblemSpec


def build_laplacian_1d(grid: GridSpec, scale: float = 1.0) -> OperatorHandle:
    """
    The second order central difference Laplacian, tridiagonal with -2/h^2 on the diagonal and
    1/h^2 next to it. It is symmetric negative definite.

    Args:
        grid (GridSpec): The interior grid.
        scale (float): A multiplier folded into the operator. Defaults to 1.

    Returns:
        OperatorHandle: The banded operator.
    """
    m, h = grid.m, grid.h
    dtype = scalar_type()
    off = np.full(m - 1, 1 / h**2, dtype=dtype)
    main = np.full(m, -2 / h**2, dtype=dtype)
    return OperatorHandle(
        sp.diags([off, main, off], [-1, 0, 1], format="dia"),
        storage=OperatorHandle.Storage.BANDED,
        scale=scale,
        symmetric=True,
        label=f"{scale:g} * Laplacian <m={m}, h={h:.4g}>",
    )


def compatibility_proxy(problem: ProblemSpec) -> float:
    """
    ||A G + G A^*||_F / ||G||_F with G evaluated at the initial state.

    The ratio stays bounded under grid refinement when G is compatible with the boundary
    conditions of A, and grows with m otherwise.
    """
    G0 = problem.G(problem.t0, problem.initial_dense())
    A = problem.A
    return float(la.norm(A @ G0 + adjoint(A @ adjoint(G0))) / la.norm(G0))
