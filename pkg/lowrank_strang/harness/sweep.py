# harness/sweep.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Convergence sweeps over step sizes and truncation modes.

Cells are independent integrations run on a thread pool; the report is assembled by the
calling thread only.

"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import NamedTuple, Optional, Union
from lowrank_strang.config import config
from lowrank_strang.exceptions import (
    ConfigurationError,
    NumericalDivergenceError,
    OrderUndefinedError,
)
from lowrank_strang.harness.reference import reference_solution
from lowrank_strang.harness.runge import halving_triples, runge_order_estimate
from lowrank_strang.integrators import Record, Scheme, integrate
from lowrank_strang.lowrank import state_distance, state_norm
from lowrank_strang.models import ProblemSpec, SchemeConfig, TruncationMode
from lowrank_strang.problems import build_problem
from lowrank_strang.reports import ConvergenceReport

logger = logging.getLogger(__name__)


class Cell(NamedTuple):
    """The outcome of one (tau, mode) integration."""

    tau: float
    mode: TruncationMode
    state: object
    delta: float
    runtime_ms: float
    diverged: bool


def truncation_modes(ranks=None, thetas=None) -> list:
    """
    The truncation modes of a sweep: fixed ranks first, then adaptive thresholds.

    Raises:
        ConfigurationError: If neither ranks nor thresholds are given.
    """
    modes = [TruncationMode.fixed(int(r)) for r in ranks or ()]
    modes += [TruncationMode.adaptive(float(theta)) for theta in thetas or ()]
    if not modes:
        raise ConfigurationError("A sweep needs at least one rank or threshold.")
    return modes


def _run_cell(
    problem: ProblemSpec, scheme: Scheme, tau: float, mode: TruncationMode
) -> Cell:
    start = time.perf_counter()
    try:
        result = integrate(problem, scheme, SchemeConfig(tau, mode), Record(ranks=False))
    except NumericalDivergenceError as error:
        logger.warning("Cell tau = %g, %s diverged: %s", tau, mode, error)
        return Cell(tau, mode, None, math.nan, 1e3 * (time.perf_counter() - start), True)
    runtime_ms = 1e3 * (time.perf_counter() - start)
    logger.info("Cell tau = %g, %s done in %.0f ms", tau, mode, runtime_ms)
    return Cell(tau, mode, result.state, result.delta, runtime_ms, False)


# pylint: disable=too-many-arguments,too-many-locals
def convergence_sweep(
    problem: Union[str, ProblemSpec],
    taus,
    ranks=None,
    thetas=None,
    reference=None,
    out: Union[str, Path, None] = None,
    m: Optional[int] = None,
    T: Optional[float] = None,
    seed: Optional[int] = None,
    tau_ref: Optional[float] = None,
    workers: Optional[int] = None,
    scheme: Union[Scheme, str] = Scheme.LOWRANK_STRANG,
    checkpoint_dir: Union[str, Path, None] = None,
) -> ConvergenceReport:
    """
    Integrates a problem for every (tau, mode) pair and measures the final time errors
    against a reference, with Runge order estimates along every halving chain of taus.

    Args:
        problem (`str` | `ProblemSpec`): A benchmark label or a problem.
        taus (list): The step sizes.
        ranks (`list`, optional): Fixed truncation ranks.
        thetas (`list`, optional): Adaptive truncation thresholds.
        reference: A dense reference state, or a reference policy name. Defaults to the
            configured policy.
        out (`str` | `Path`, optional): Where to write the CSV.
        m (`int`, optional): The grid size of a benchmark label.
        T (`float`, optional): The final time of a benchmark label.
        seed (`int`, optional): The seed of a random benchmark.
        tau_ref (`float`, optional): The reference step.
        workers (`int`, optional): Concurrent cells. Defaults to the configured workers.
        scheme (`Scheme` | str): The scheme of every cell. Defaults to lowrank_strang.
        checkpoint_dir (`str` | `Path`, optional): The reference checkpoint directory.

    Raises:
        ConfigurationError: If no step size or truncation mode is given.

    Returns:
        ConvergenceReport: Errors, orders and diagnostics. Diverged cells are recorded, not
        raised.
    """
    harness = config.harness
    if not taus:
        raise ConfigurationError("A sweep needs at least one step size.")
    modes = truncation_modes(ranks, thetas)
    if isinstance(problem, str):
        problem = build_problem(problem, m or harness["m"], seed=seed, T=T)
    scheme = Scheme(scheme)

    if reference is None or isinstance(reference, str):
        solution = reference_solution(
            problem, policy=reference, tau_ref=tau_ref, directory=checkpoint_dir
        )
        reference, description = solution.state, f"dense Strang checkpoint {solution.path}"
    else:
        description = "supplied"
    reference_norm = state_norm(reference)

    jobs = [(float(tau), mode) for mode in modes for tau in taus]
    with ThreadPoolExecutor(max_workers=workers or harness["workers"]) as executor:
        cells = list(
            executor.map(lambda job: _run_cell(problem, scheme, *job), jobs)
        )

    report = ConvergenceReport(
        problem.label,
        scheme,
        problem.m,
        seed=problem.metadata.get("seed"),
        metadata={
            "T": problem.T,
            "inner_substeps": config.integrators["inner_substeps"],
            "reference": description,
            "tau_ref": tau_ref if tau_ref is not None else harness["tau_ref"],
        },
    )
    states = {}
    for cell in cells:
        mode = str(cell.mode)
        if cell.diverged:
            report.add_row(cell.tau, mode, math.nan, runtime_ms=cell.runtime_ms, diverged=True)
            continue
        error = state_distance(cell.state, reference)
        report.add_row(
            cell.tau,
            mode,
            error,
            error / reference_norm if reference_norm else math.nan,
            cell.runtime_ms,
        )
        report.deltas[mode] = cell.delta
        states[(mode, cell.tau)] = cell.state

    for mode in report.modes:
        for triple in halving_triples(taus):
            solutions = [states.get((mode, tau)) for tau in triple]
            if any(solution is None for solution in solutions):
                continue
            try:
                p = runge_order_estimate(*solutions, tau=triple[0])
            except OrderUndefinedError as error:
                logger.info("%s: %s", mode, error)
                p = None
            report.add_order(mode, triple[-1], p)

    if out is not None:
        report.write_csv(out)
    return report
