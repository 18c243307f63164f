# problems/__init__.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the benchmark problems and user operator ingestion.

"""
from typing import Optional
from strenum import StrEnum
from lowrank_strang.config import config
from lowrank_strang.exceptions import UnknownProblemError
from lowrank_strang.models import GridSpec, ProblemSpec
from .laplacian import build_laplacian_1d, compatibility_proxy
from .heat import heat_source_problem
from .lyapunov import lyapunov_random_problem, random_spsd_factor
from .cubic import cubic_problem
from .loaders import load_operator

ProblemLabel = StrEnum(
    "ProblemLabel", {k: v["label"] for k, v in config.problems["benchmarks"].items()}
)
"""(StrEnum): The benchmark labels accepted by the command line."""


def benchmark_grid(label: str, m: int) -> GridSpec:
    """The interior grid of a benchmark, over its configured domain."""
    settings = config.problems["benchmarks"][ProblemLabel(label).name]
    return GridSpec(m, settings["lo"], settings["hi"])


def build_problem(
    label: str,
    m: int,
    seed: Optional[int] = None,
    T: Optional[float] = None,
    alpha: Optional[float] = None,
) -> ProblemSpec:
    """
    Builds a benchmark by label.

    Args:
        label (str): One of the configured labels ("heat", "lyap-random", "cubic").
        m (int): The number of interior grid points.
        seed (`int`, optional): The seed of the random benchmark.
        T (`float`, optional): The final time.
        alpha (`float`, optional): The diffusion coefficient of the cubic benchmark.

    Raises:
        UnknownProblemError: If the label is not a benchmark.

    Returns:
        ProblemSpec: The problem.
    """
    try:
        label = ProblemLabel(label)
    except ValueError as exc:
        raise UnknownProblemError(label, [p.value for p in ProblemLabel]) from exc

    if label == ProblemLabel.LYAP_RANDOM:
        return lyapunov_random_problem(m, seed=seed, T=T)
    grid = benchmark_grid(label, m)
    if label == ProblemLabel.CUBIC:
        return cubic_problem(grid, alpha=alpha, T=T)
    return heat_source_problem(grid, T=T)
