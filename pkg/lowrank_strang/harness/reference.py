# harness/reference.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Dense reference solutions computed by full-rank Strang splitting with a fine step and kept as
Matrix Market checkpoints, cataloged by the content hash of their parameters.

"""
import logging
import threading
import warnings
from pathlib import Path
from typing import NamedTuple, Optional, Union
import numpy as np
from strenum import StrEnum
from lowrank_strang.config import config
from lowrank_strang.database import get_engine, get_session
from lowrank_strang.exceptions import ConfigurationError, MissingReferenceError
from lowrank_strang.integrators import Record, Scheme, integrate
from lowrank_strang.lowrank import load_dense, save_dense
from lowrank_strang.models import ConstantForcing, HadamardPower, ProblemSpec, SchemeConfig
from lowrank_strang.problems import build_problem
from lowrank_strang.utils import array_digest, content_hash

logger = logging.getLogger(__name__)

ReferencePolicy = StrEnum(
    "ReferencePolicy", {"CHECKPOINT": "checkpoint", "DENSE_STRANG_FINE": "dense-strang-fine"}
)
"""(StrEnum): Reuse a matching checkpoint, or always integrate afresh."""

_locks = {}
_locks_guard = threading.Lock()


def _lock(key: str) -> threading.Lock:
    with _locks_guard:
        return _locks.setdefault(key, threading.Lock())


class ReferenceSolution(NamedTuple):
    """A reference state and where it is stored."""

    state: np.ndarray
    """(ndarray): The dense state at the final time."""
    path: Path
    """(Path): The checkpoint file."""
    cache_hit: bool
    """(bool): Whether the state was read from an existing checkpoint."""
    content_hash: str
    """(str): The hash of the reference parameters."""


def _forcing_data(G) -> str:
    if isinstance(G, ConstantForcing):
        return array_digest(G.Q)
    if isinstance(G, HadamardPower):
        return f"power={G.power}"
    return type(G).__name__


def reference_parameters(problem: ProblemSpec, tau_ref: float, inner_substeps: int) -> dict:
    """
    The parameters a reference solution depends on: the scalar construction parameters and
    digests of the operator, the initial value and the forcing data. A callable nonlinearity
    is identified by its label only.
    """
    params = {
        key: value
        for key, value in problem.metadata.items()
        if isinstance(value, (int, float, str)) or value is None
    }
    params.update(
        label=problem.label,
        forcing=problem.G.label,
        forcing_data=_forcing_data(problem.G),
        operator=array_digest(problem.A.dense),
        initial=array_digest(problem.initial_dense()),
        m=problem.m,
        t0=problem.t0,
        T=problem.T,
        tau_ref=float(tau_ref),
        inner_substeps=inner_substeps,
        dtype=str(problem.X0_lowrank.S.dtype),
    )
    return params


def load_checkpoint(session, content_hash_: str) -> tuple:
    """
    Reads a cataloged checkpoint and verifies its digest.

    Raises:
        MissingReferenceError: If there is no usable checkpoint with this hash. A stored file
            that does not match its digest triggers a warning and counts as missing.

    Returns:
        tuple: The state and its path.
    """
    checkpoint = session.find(content_hash_)
    if checkpoint is None or not Path(checkpoint.path).is_file():
        raise MissingReferenceError(content_hash_)
    state = load_dense(checkpoint.path)
    if array_digest(state) != checkpoint.digest:
        warnings.warn(
            f"Checkpoint {checkpoint.path} does not match its digest and will be recomputed."
        )
        raise MissingReferenceError(content_hash_)
    return state, Path(checkpoint.path)


# pylint: disable=too-many-arguments,too-many-locals
def reference_solution(
    problem: Union[str, ProblemSpec],
    policy: str = None,
    tau_ref: Optional[float] = None,
    m: Optional[int] = None,
    T: Optional[float] = None,
    seed: Optional[int] = None,
    directory: Union[str, Path, None] = None,
    inner_substeps: int = 1,
) -> ReferenceSolution:
    """
    Returns the dense full-rank Strang solution at tau_ref, reusing a checkpoint whose content
    hash matches unless the policy asks for a fresh integration.

    Args:
        problem (`str` | `ProblemSpec`): A benchmark label or a problem.
        policy (str): 'checkpoint' or 'dense-strang-fine'. Defaults to the configured policy.
        tau_ref (`float`, optional): The reference step. Defaults to the configured tau_ref.
        m (`int`, optional): The grid size of a benchmark label. Defaults to the configured m.
        T (`float`, optional): The final time of a benchmark label.
        seed (`int`, optional): The seed of a random benchmark.
        directory (`str` | `Path`, optional): The checkpoint directory.
        inner_substeps (int): Heun steps per nonlinear substep. Defaults to 1.

    Raises:
        ConfigurationError: If the grid is too large for a dense reference.

    Returns:
        ReferenceSolution: The state, its checkpoint file, whether it was cached and the hash.
    """
    harness = config.harness
    policy = ReferencePolicy(policy or harness["reference_policy"])
    tau_ref = harness["tau_ref"] if tau_ref is None else tau_ref
    if isinstance(problem, str):
        problem = build_problem(problem, m or harness["m"], seed=seed, T=T)
    if problem.m > harness["max_dense_m"]:
        raise ConfigurationError(
            f"A dense reference at m = {problem.m} exceeds the limit of "
            f"{harness['max_dense_m']}; raise harness.max_dense_m to allow it."
        )
    directory = Path(directory or harness["checkpoint_dir"])
    key = content_hash(reference_parameters(problem, tau_ref, inner_substeps))

    with _lock(key):
        with get_session(get_engine(directory)) as session:
            if policy == ReferencePolicy.CHECKPOINT:
                try:
                    state, path = load_checkpoint(session, key)
                    logger.info("Reference %s: cache hit at %s", problem, path)
                    return ReferenceSolution(state, path, True, key)
                except MissingReferenceError:
                    logger.info("Reference %s: no checkpoint, integrating", problem)

            result = integrate(
                problem,
                Scheme.FULLRANK_STRANG,
                SchemeConfig(tau_ref, inner_substeps=inner_substeps),
                Record(ranks=False),
            )
            path = save_dense(directory / key / "X.mtx", result.state)
            state = load_dense(path)
            session.record(
                content_hash=key,
                label=problem.label,
                m=problem.m,
                T=problem.T,
                tau_ref=float(tau_ref),
                seed=problem.metadata.get("seed"),
                path=str(path),
                digest=array_digest(state),
            )
            logger.info(
                "Reference %s: %d steps in %.1f s, stored at %s",
                problem,
                result.steps,
                result.wall_time,
                path,
            )
    return ReferenceSolution(state, path, False, key)
