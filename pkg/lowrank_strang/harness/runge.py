# harness/runge.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Order estimation by the Runge rule on successively halved step sizes.

"""
import math
from typing import Optional
from lowrank_strang.config import config
from lowrank_strang.exceptions import OrderUndefinedError
from lowrank_strang.lowrank import state_distance


def runge_order_estimate(
    sol_tau, sol_half, sol_quarter, tau: float = math.nan, underflow: Optional[float] = None
) -> float:
    """
    p = log2(d(sol_tau, sol_half) / d(sol_half, sol_quarter)), with d the Frobenius distance
    of dense or factored states.

    Args:
        sol_tau: The final state computed with step tau.
        sol_half: The final state computed with step tau / 2.
        sol_quarter: The final state computed with step tau / 4.
        tau (float): The largest step, reported when the estimate is undefined.
        underflow (`float`, optional): Smallest admissible distance. Defaults to the
            configured order_underflow.

    Raises:
        OrderUndefinedError: If a distance falls below the underflow threshold.

    Returns:
        float: The estimated order p.
    """
    underflow = config.harness["order_underflow"] if underflow is None else underflow
    coarse = state_distance(sol_tau, sol_half)
    fine = state_distance(sol_half, sol_quarter)
    if fine < underflow or coarse < underflow:
        raise OrderUndefinedError(tau)
    return math.log2(coarse / fine)


def halving_triples(taus) -> list:
    """
    Returns the (tau, tau / 2, tau / 4) triples found among taus, largest first.
    """
    taus = sorted(set(float(tau) for tau in taus), reverse=True)
    return [
        (a, b, c)
        for a, b, c in zip(taus, taus[1:], taus[2:])
        if math.isclose(b, a / 2, rel_tol=1e-9) and math.isclose(c, b / 2, rel_tol=1e-9)
    ]
