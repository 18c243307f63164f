# problems/lyapunov.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The differential Lyapunov equation X' = AX + XA^T + Q with random low-rank data.

"""
from typing import Optional
import numpy as np
import scipy.linalg as la
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidProblemError
from lowrank_strang.lowrank import densify
from lowrank_strang.models import ConstantForcing, GridSpec, LowRankFactor, ProblemSpec
from lowrank_strang.problems.laplacian import build_laplacian_1d


def random_spsd_factor(rng: np.random.Generator, m: int, rank: int) -> LowRankFactor:
    """
    The factor of Z Z^T / ||Z Z^T||_F for a standard normal m x rank matrix Z, with V = U and a
    symmetric core.
    """
    Z = rng.standard_normal((m, rank))
    U, R = la.qr(Z, mode="economic")
    core = R @ R.T
    core = (core + core.T) / 2
    return LowRankFactor(U, core / la.norm(core), U)


def lyapunov_random_problem(
    m: int, seed: Optional[int] = None, T: Optional[float] = None
) -> ProblemSpec:
    """
    Builds the random Lyapunov benchmark on [-pi, pi].

    X0 and Q are symmetric positive semidefinite of the configured ranks (10 and 5 by default),
    normalized to unit Frobenius norm and drawn from a generator seeded with seed.

    Args:
        m (int): The number of interior grid points, at least 16.
        seed (`int`, optional): The generator seed. Defaults to the configured seed.
        T (`float`, optional): The final time. Defaults to the configured horizon.

    Raises:
        InvalidProblemError: If m < 16.

    Returns:
        ProblemSpec: The problem.
    """
    settings = config.problems["benchmarks"]["LYAP_RANDOM"]
    if m < 16:
        raise InvalidProblemError(f"The random Lyapunov problem needs m >= 16, got {m}.")
    seed = settings["seed"] if seed is None else seed
    rng = np.random.default_rng(seed)

    X0 = random_spsd_factor(rng, m, settings["initial_rank"])
    Q_factor = random_spsd_factor(rng, m, settings["forcing_rank"])
    Q = densify(Q_factor)
    Q = (Q + Q.T) / 2

    grid = GridSpec(m, settings["lo"], settings["hi"])
    return ProblemSpec(
        label=settings["label"],
        A=build_laplacian_1d(grid),
        G=ConstantForcing(Q, factor=Q_factor, label=f"random SPSD rank {Q_factor.rank}"),
        X0_lowrank=X0,
        T=settings["T"] if T is None else T,
        metadata={
            "m": m,
            "lo": grid.lo,
            "hi": grid.hi,
            "seed": seed,
            "initial_rank": X0.rank,
            "forcing_rank": Q_factor.rank,
            "normalization": "unit Frobenius norm",
        },
    )
