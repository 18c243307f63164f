# harness/svdump.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Singular value decay of a final state.

"""
from pathlib import Path
from typing import Optional, Union
from lowrank_strang.config import config
from lowrank_strang.exceptions import ConfigurationError
from lowrank_strang.integrators import Record, Scheme, integrate
from lowrank_strang.lowrank import singular_values
from lowrank_strang.models import ProblemSpec, SchemeConfig, TruncationMode
from lowrank_strang.problems import build_problem
from lowrank_strang.reports import SingularValueReport


# pylint: disable=too-many-arguments
def singular_value_dump(
    problem: Union[str, ProblemSpec],
    scheme: Union[Scheme, str] = Scheme.FULLRANK_STRANG,
    tau: Optional[float] = None,
    T: Optional[float] = None,
    k: int = 10,
    out: Union[str, Path, None] = None,
    m: Optional[int] = None,
    seed: Optional[int] = None,
) -> SingularValueReport:
    """
    Integrates to T and reports the k leading singular values of the final state.

    Low-rank schemes run at fixed rank k, so values beyond the rank of the state are zero.

    Args:
        problem (`str` | `ProblemSpec`): A benchmark label or a problem.
        scheme (`Scheme` | str): The scheme. Defaults to fullrank_strang.
        tau (`float`, optional): The step size. Defaults to the configured harness tau.
        T (`float`, optional): The final time.
        k (int): The number of singular values. Defaults to 10.
        out (`str` | `Path`, optional): Where to write the CSV.
        m (`int`, optional): The grid size of a benchmark label.
        seed (`int`, optional): The seed of a random benchmark.

    Raises:
        ConfigurationError: If k is not between 1 and m.

    Returns:
        SingularValueReport: The values, descending.
    """
    harness = config.harness
    if isinstance(problem, str):
        problem = build_problem(problem, m or harness["m"], seed=seed, T=T)
    if not 1 <= k <= problem.m:
        raise ConfigurationError(
            f"Cannot report {k} singular values of a {problem.m}x{problem.m} state."
        )
    tau = harness["tau"] if tau is None else tau
    result = integrate(
        problem,
        scheme,
        SchemeConfig(tau, TruncationMode.fixed(k)),
        Record(ranks=False),
        T=T,
    )
    report = SingularValueReport(
        problem.label,
        singular_values(result.state, k),
        metadata={
            "m": problem.m,
            "T": result.t,
            "tau": tau,
            "scheme": str(result.scheme),
            "seed": problem.metadata.get("seed"),
        },
    )
    if out is not None:
        report.write_csv(out)
    return report
