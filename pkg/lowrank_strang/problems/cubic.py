# problems/cubic.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The semilinear reaction diffusion equation v_t = alpha (v_xx + v_yy) + v^3 on [0, 1]^2.

"""
from typing import Optional
import numpy as np
import scipy.linalg as la
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidProblemError
from lowrank_strang.models import GridSpec, HadamardPower, LowRankFactor, ProblemSpec
from lowrank_strang.problems.laplacian import build_laplacian_1d


def cubic_problem(
    grid: GridSpec, alpha: Optional[float] = None, T: Optional[float] = None
) -> ProblemSpec:
    """
    Builds the cubic benchmark U' = alpha (AU + UA^T) + U^{o3} with the rank one initial value
    16 x(1 - x) y(1 - y).

    Args:
        grid (GridSpec): The interior grid, over [0, 1] for the benchmark.
        alpha (`float`, optional): The diffusion coefficient. Defaults to the configured 1/50.
        T (`float`, optional): The final time. Defaults to the configured horizon.

    Raises:
        InvalidProblemError: If alpha is not positive.

    Returns:
        ProblemSpec: The problem.
    """
    settings = config.problems["benchmarks"]["CUBIC"]
    alpha = settings["alpha"] if alpha is None else alpha
    if not alpha > 0:
        raise InvalidProblemError(f"The diffusion coefficient must be positive, got {alpha}.")

    x = grid.nodes
    u = 4 * x * (1 - x)
    norm = la.norm(u)
    basis = (u / norm).reshape(-1, 1)

    return ProblemSpec(
        label=settings["label"],
        A=build_laplacian_1d(grid, scale=alpha),
        G=HadamardPower(3),
        X0_lowrank=LowRankFactor(basis, np.array([[norm**2]]), basis),
        T=settings["T"] if T is None else T,
        metadata={"m": grid.m, "lo": grid.lo, "hi": grid.hi, "alpha": alpha, "seed": None},
    )
