# utils/timesteps.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Step schedules t_k = t0 + k tau for the outer time integration.

"""
import math
from typing import Iterator, NamedTuple
from lowrank_strang.config import config
from lowrank_strang.exceptions import StepCountOverflowError


class StepCount(NamedTuple):
    """The number of outer steps covering [t0, T]."""

    steps: int
    """(int): The number of steps."""
    shortened: bool
    """(bool): Whether the last step is shorter than tau to land exactly on T."""


def step_count(t0: float, T: float, tau: float) -> StepCount:
    """
    Counts the steps of size tau needed to reach T from t0.

    When (T - t0) / tau is within the configured relative step_ratio_tol of an integer n, n equal
    steps are taken. Otherwise the count is rounded up and the last step shortened.

    Raises:
        StepCountOverflowError: If more than the configured max_steps would be needed.
    """
    ratio = (T - t0) / tau
    nearest = round(ratio)
    if abs(ratio - nearest) <= config.integrators["step_ratio_tol"] * max(1.0, ratio):
        count = StepCount(int(nearest), False)
    else:
        count = StepCount(math.ceil(ratio), True)

    if count.steps > config.integrators["max_steps"]:
        raise StepCountOverflowError(count.steps, config.integrators["max_steps"])
    return count


def time_steps(t0: float, T: float, tau: float) -> Iterator[tuple]:
    """
    Yields the (t_k, tau_k) pairs of the outer integration. Step times are computed as
    t0 + k tau rather than accumulated.
    """
    steps, shortened = step_count(t0, T, tau)
    for k in range(steps):
        t = t0 + k * tau
        if shortened and k == steps - 1:
            yield t, T - t
        else:
            yield t, tau
