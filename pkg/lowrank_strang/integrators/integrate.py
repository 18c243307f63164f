# integrators/integrate.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Drives a scheme from t0 to T.

"""
import dataclasses
import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Union
import numpy as np
from strenum import StrEnum
from lowrank_strang.exceptions import InvalidSchemeConfigError
from lowrank_strang.integrators.bug import bug2_midpoint_step
from lowrank_strang.integrators.strang import strang_fullrank_step, strang_lowrank_step
from lowrank_strang.linalg import adjoint
from lowrank_strang.lowrank import state_distance, svd_truncate
from lowrank_strang.models import LowRankFactor, ProblemSpec, SchemeConfig
from lowrank_strang.utils import step_count, time_steps

logger = logging.getLogger(__name__)


class Scheme(StrEnum):
    """The time integration schemes."""

    LOWRANK_STRANG = "lowrank_strang"
    FULLRANK_STRANG = "fullrank_strang"
    BUG2_ONLY = "bug2_only"

    @property
    def is_lowrank(self) -> bool:
        """(bool): Whether the scheme evolves a factored state."""
        return self != Scheme.FULLRANK_STRANG


@dataclass(frozen=True)
class Record:
    """What an integration keeps besides the final state."""

    ranks: bool = True
    """(bool): Keep (t_k, r_k, tail_norm, floored) after every step."""
    states: bool = False
    """(bool): Keep the state after every step."""
    validate: bool = False
    """(bool): Check orthonormality of the factor after every step."""


# pylint: disable=too-many-instance-attributes
@dataclass
class IntegrationResult:
    """The final state of an integration and the diagnostics it recorded."""

    state: Union[LowRankFactor, np.ndarray]
    """(`LowRankFactor` | `ndarray`): The state at the final time."""
    t: float
    """(float): The final time."""
    scheme: Scheme
    """(Scheme): The scheme used."""
    tau: float
    """(float): The outer step size."""
    steps: int = 0
    """(int): The number of steps taken."""
    delta: float = 0.0
    """(float): ||X0 - Y0||_F, the error of the initial truncation."""
    history: list = field(default_factory=list)
    """(list): (t_k, r_k, tail_norm, floored) after every step."""
    states: list = field(default_factory=list)
    """(list): (t_k, state) after every step, when recorded."""
    wall_time: float = 0.0
    """(float): Seconds spent stepping."""

    @property
    def rank(self) -> Optional[int]:
        """(int): The final rank of a factored state."""
        return self.state.rank if isinstance(self.state, LowRankFactor) else None

    @property
    def max_rank(self) -> Optional[int]:
        """(int): The largest rank attained during the integration."""
        ranks = [r for _, r, _, _ in self.history if r is not None]
        return max(ranks) if ranks else self.rank


def _full_field(problem: ProblemSpec):
    # AY + YA^* + G(t, Y), for BUG2 without splitting
    A, G = problem.A, problem.G

    def F(t, Y):
        return A @ Y + adjoint(A @ adjoint(Y)) + G(t, Y)

    return F


def initial_state(
    problem: ProblemSpec, scheme: Scheme, cfg: SchemeConfig
) -> tuple:
    """
    The starting state of a scheme and the error of the initial truncation.

    Low-rank schemes start from X0_lowrank, rounded to cfg.truncation when it is a fixed rank
    below the rank of the initial factor. The dense scheme starts from the dense initial value.

    Returns:
        tuple: The state and delta = ||X0 - Y0||_F.
    """
    if not scheme.is_lowrank:
        return problem.initial_dense(), 0.0
    Y0 = problem.X0_lowrank
    mode = cfg.truncation
    if mode is not None and not mode.is_adaptive and mode.r_target < Y0.rank:
        Y0 = svd_truncate(Y0, mode).factor
    if problem.X0_dense is None:
        if Y0 is problem.X0_lowrank:
            return Y0, 0.0
        return Y0, state_distance(Y0, problem.X0_lowrank)
    return Y0, state_distance(Y0, problem.X0_dense)


# pylint: disable=too-many-arguments,too-many-locals
def integrate(
    problem: ProblemSpec,
    scheme: Union[Scheme, str],
    cfg: SchemeConfig,
    record: Optional[Record] = None,
    initial: Union[LowRankFactor, np.ndarray, None] = None,
    T: Optional[float] = None,
) -> IntegrationResult:
    """
    Applies the chosen step from problem.t0 until the final time.

    When (T - t0) / tau is not an integer the last step is shortened to land exactly on T.

    Args:
        problem (ProblemSpec): The problem.
        scheme (`Scheme` | str): One of lowrank_strang, fullrank_strang or bug2_only.
        cfg (SchemeConfig): The step size, inner resolution and truncation rule.
        record (`Record`, optional): The diagnostics to keep. Defaults to the rank history.
        initial (`LowRankFactor` | `ndarray`, optional): Overrides the initial state.
        T (`float`, optional): Overrides the final time of the problem. T = t0 takes no step.

    Raises:
        InvalidSchemeConfigError: If the scheme is unknown.
        StepCountOverflowError: If the step count exceeds the configured maximum.
        NonlinearityBlowUpError: If the nonlinearity blows up.

    Returns:
        IntegrationResult: The final state and the recorded diagnostics.
    """
    try:
        scheme = Scheme(scheme)
    except ValueError as exc:
        raise InvalidSchemeConfigError(
            f"Unknown scheme '{scheme}', expected one of: "
            f"{', '.join(s.value for s in Scheme)}."
        ) from exc
    record = record or Record()
    T = problem.T if T is None else T
    t0 = problem.t0

    state, delta = initial_state(problem, scheme, cfg)
    if initial is not None:
        state, delta = initial, 0.0

    steps, shortened = step_count(t0, T, cfg.tau)
    if shortened:
        logger.warning(
            "(T - t0) / tau = %.6g is not an integer, the last step is shortened",
            (T - t0) / cfg.tau,
        )
    result = IntegrationResult(state, T, scheme, cfg.tau, steps, delta)
    full_field = _full_field(problem) if scheme == Scheme.BUG2_ONLY else None

    start = time.perf_counter()
    for t, tau in time_steps(t0, T, cfg.tau):
        step_cfg = cfg if tau == cfg.tau else dataclasses.replace(cfg, tau=tau)
        if scheme == Scheme.FULLRANK_STRANG:
            state = strang_fullrank_step(problem, t, state, step_cfg)
            tail_norm, floored = 0.0, False
        elif scheme == Scheme.LOWRANK_STRANG:
            state, _, tail_norm, floored = strang_lowrank_step(problem, t, state, step_cfg)
        else:
            state, _, tail_norm, floored = bug2_midpoint_step(
                full_field, t, tau, state, step_cfg
            )

        if record.validate and scheme.is_lowrank:
            state.validate()
        if record.ranks:
            rank = state.rank if scheme.is_lowrank else None
            result.history.append((t + tau, rank, tail_norm, floored))
        if record.states:
            result.states.append((t + tau, state))

    result.state = state
    result.wall_time = time.perf_counter() - start
    logger.debug(
        "Integrated %r with %s, tau = %g: %d steps in %.3f s",
        problem,
        scheme,
        cfg.tau,
        steps,
        result.wall_time,
    )
    return result
