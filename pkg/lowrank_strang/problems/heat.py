# problems/heat.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The heat equation u_t = u_xx + u_yy + g on [-pi, pi]^2 with a separable source, in matrix
form X' = AX + XA^T + Q.

"""
from typing import Optional
import numpy as np
import scipy.linalg as la
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidProblemError
from lowrank_strang.lowrank import factor_from_dense, factored_sum, svd_truncate
from lowrank_strang.models import (
    ConstantForcing,
    GridSpec,
    LowRankFactor,
    ProblemSpec,
    TruncationMode,
)
from lowrank_strang.problems.laplacian import build_laplacian_1d


def _symmetric_rank_one(u: np.ndarray, weight: float) -> LowRankFactor:
    norm = la.norm(u)
    basis = (u / norm).reshape(-1, 1)
    return LowRankFactor(basis, np.array([[weight * norm**2]]), basis)


def heat_source_problem(
    grid: GridSpec, T: Optional[float] = None, coefficients: Optional[list] = None
) -> ProblemSpec:
    """
    Builds the heat benchmark.

    The source is g(x, y) = sum_k c_k sin(kx) sin(ky) with the configured coefficients, whose
    default keeps the k = 1 term only. The initial value is
    u0(x, y) = sum_{k=1}^{10} 10^{-(k-1)} exp(-k(x^2 + y^2)), assembled as a sum of rank one
    factors.

    Args:
        grid (GridSpec): The interior grid, over [-pi, pi] for the benchmark.
        T (`float`, optional): The final time. Defaults to the configured horizon.
        coefficients (`list`, optional): The source coefficients c_1, c_2, ...

    Raises:
        InvalidProblemError: If every source coefficient vanishes.

    Returns:
        ProblemSpec: The problem.
    """
    settings = config.problems["benchmarks"]["HEAT"]
    coefficients = settings["source_coefficients"] if coefficients is None else coefficients
    if not any(coefficients):
        raise InvalidProblemError("The heat source needs at least one nonzero coefficient.")
    tail = config.problems["machine_tail"]
    x = grid.nodes

    Q = np.zeros((grid.m, grid.m))
    for k, c in enumerate(coefficients, start=1):
        if c:
            Q += c * np.outer(np.sin(k * x), np.sin(k * x))
    Q_factor = factor_from_dense(Q, TruncationMode.adaptive(tail * la.norm(Q))).factor

    X0 = _symmetric_rank_one(np.exp(-x**2), 1.0)
    for k in range(2, settings["initial_terms"] + 1):
        X0 = factored_sum(X0, _symmetric_rank_one(np.exp(-k * x**2), 10.0 ** -(k - 1)))
    X0 = svd_truncate(X0, TruncationMode.adaptive(tail * la.norm(X0.S))).factor

    return ProblemSpec(
        label=settings["label"],
        A=build_laplacian_1d(grid),
        G=ConstantForcing(Q, factor=Q_factor, label="sum_k c_k sin(kx) sin(ky)"),
        X0_lowrank=X0,
        T=settings["T"] if T is None else T,
        metadata={
            "m": grid.m,
            "lo": grid.lo,
            "hi": grid.hi,
            "coefficients": [float(c) for c in coefficients],
            "seed": None,
        },
    )
