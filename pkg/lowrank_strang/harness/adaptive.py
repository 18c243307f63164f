# harness/adaptive.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Rank adaptive integration with a truncation threshold.

"""
from pathlib import Path
from typing import Optional, Union
from lowrank_strang.config import config
from lowrank_strang.exceptions import InvalidSchemeConfigError
from lowrank_strang.integrators import Record, Scheme, integrate
from lowrank_strang.lowrank import with_rank
from lowrank_strang.models import ProblemSpec, SchemeConfig, TruncationMode
from lowrank_strang.problems import build_problem
from lowrank_strang.reports import RankHistory


# pylint: disable=too-many-arguments
def adaptive_rank_run(
    problem: Union[str, ProblemSpec],
    tau: float,
    theta: float,
    r_init: int,
    T: Optional[float] = None,
    out: Union[str, Path, None] = None,
    m: Optional[int] = None,
    seed: Optional[int] = None,
) -> RankHistory:
    """
    Runs low-rank Strang splitting with adaptive truncation from an initial factor of rank
    r_init, recording (t_k, r_k, tail_norm, floored) after every step.

    Args:
        problem (`str` | `ProblemSpec`): A benchmark label or a problem.
        tau (float): The step size.
        theta (float): The absolute truncation threshold.
        r_init (int): The rank of the initial factor, padded with zero directions or
            truncated as needed.
        T (`float`, optional): The final time.
        out (`str` | `Path`, optional): Where to write the CSV.
        m (`int`, optional): The grid size of a benchmark label.
        seed (`int`, optional): The seed of a random benchmark.

    Raises:
        InvalidSchemeConfigError: If r_init is not between 1 and m.
        InvalidTruncationModeError: If theta is negative.

    Returns:
        RankHistory: The per step ranks, with the final state attached.
    """
    mode = TruncationMode.adaptive(theta)
    if isinstance(problem, str):
        problem = build_problem(problem, m or config.harness["m"], seed=seed, T=T)
    if not 1 <= r_init <= problem.m:
        raise InvalidSchemeConfigError(
            f"The initial rank must be between 1 and {problem.m}, got {r_init}."
        )

    result = integrate(
        problem,
        Scheme.LOWRANK_STRANG,
        SchemeConfig(tau, mode),
        Record(ranks=True),
        initial=with_rank(problem.X0_lowrank, r_init),
        T=T,
    )
    history = RankHistory.from_result(
        problem.label,
        result,
        metadata={
            "m": problem.m,
            "T": result.t,
            "tau": tau,
            "theta": theta,
            "r_init": r_init,
            "max_rank": result.max_rank,
            "steps": result.steps,
        },
    )
    if out is not None:
        history.write_csv(out)
    return history
